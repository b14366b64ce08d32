// Copyright 2026 The epcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "construct.hpp"

#include <algorithm>

#include "error.hpp"

namespace epc {

Code compose(const Hypergraph& g, const Coloring& coloring, const Code& base) {
  require(coloring.colors.size() == g.vertex_count(), "coloring length must equal n");
  if (!validate_coloring(g, coloring)) fail(ErrorKind::kInvalid, "coloring is not a valid strong coloring");
  require(base.dimension() == g.uniformity(), "base code dimension must equal the uniformity k");
  require(base.length() >= coloring.num_colors,
          "base code has " + std::to_string(base.length()) + " positions for " +
              std::to_string(coloring.num_colors) + " colors");
  const std::uint32_t n = g.vertex_count(), k = base.dimension();
  if (base.is_linear()) {
    std::vector<GaloisField::Element> gen(static_cast<std::size_t>(k) * n);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t v = 0; v < n; ++v)
        gen[i * n + v] = base.generator()[i * base.length() + coloring.colors[v]];
    return Code::linear(base.field_ptr(), k, n, std::move(gen));
  }
  const std::uint64_t rows = base.message_count();
  std::vector<Symbol> table(rows * n);
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint32_t v = 0; v < n; ++v) table[r * n + v] = base.at(r, coloring.colors[v]);
  return Code::from_table(base.alphabet_size(), k, n, std::move(table));
}

ComposedCode compose_with_rs(const Hypergraph& g, std::uint64_t budget) {
  auto chi = strong_chromatic(g, ChromaticMode::kExact, budget);
  const std::uint32_t k = g.uniformity();
  const std::uint32_t positions = std::max(chi.coloring.num_colors, k);
  const auto q = static_cast<std::uint32_t>(next_prime_power(positions - 1));
  auto field = std::make_shared<const GaloisField>(q);
  Code base = rs_code(field, positions, k);
  Code code = compose(g, chi.coloring, base);
  return ComposedCode{std::move(code), std::move(chi), q};
}

Code pg_linear_code(std::shared_ptr<const GaloisField> field, std::uint32_t k) {
  require(field != nullptr, "pg_linear_code needs a field");
  require(k >= 2, "pg_linear_code needs k >= 2");
  const auto q = field->order();
  std::uint64_t n = 0, pw = 1;
  for (std::uint32_t i = 0; i < k; ++i, pw *= q) {
    n += pw;
    if (n > kMaxPgVertices)
      fail(ErrorKind::kCapExceeded, "pg code exceeds " + std::to_string(kMaxPgVertices) + " positions");
  }
  const auto vecs = normalized_vectors(*field, k);
  const auto len = static_cast<std::uint32_t>(vecs.size());
  std::vector<GaloisField::Element> gen(static_cast<std::size_t>(k) * len);
  for (std::uint32_t j = 0; j < len; ++j)
    for (std::uint32_t i = 0; i < k; ++i) gen[i * len + j] = vecs[j][i];
  return Code::linear(std::move(field), k, len, std::move(gen));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> average_error_labels(std::uint32_t p,
                                                                         std::uint32_t n) {
  require(n >= 2, "average-error code needs n >= 2");
  const std::uint32_t groups = p + 1;
  const std::uint32_t alpha = n / groups, r = n - alpha * groups;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> labels;
  labels.reserve(n);
  for (std::uint32_t i = 0; i < groups; ++i) {
    const std::uint32_t copies = alpha + (i < r ? 1 : 0);
    for (std::uint32_t j = 0; j < copies; ++j) labels.emplace_back(i, j);
  }
  return labels;
}

Code average_error_code(std::uint32_t p, std::uint32_t n) {
  require(is_prime_power(p), "average-error code needs a prime-power alphabet");
  const auto labels = average_error_labels(p, n);
  Code base = rs_code(std::make_shared<const GaloisField>(p), p + 1, 2);
  std::vector<GaloisField::Element> gen(2 * static_cast<std::size_t>(n));
  for (std::uint32_t i = 0; i < 2; ++i)
    for (std::uint32_t v = 0; v < n; ++v)
      gen[i * n + v] = base.generator()[i * base.length() + labels[v].first];
  return Code::linear(base.field_ptr(), 2, n, std::move(gen));
}

Rational average_error_lower_bound(std::uint32_t p, std::uint32_t n) {
  require(n >= 2, "need n >= 2");
  const std::uint32_t groups = p + 1;
  const BigInt alpha = n / groups, r = n - (n / groups) * groups;
  const BigInt same_group = alpha * (alpha - 1) / 2 * groups + r * alpha;
  const BigInt all = BigInt(n) * (n - 1) / 2;
  return 1 - Rational(same_group, all);
}

Code code_from_hom(std::span<const UniversalVertex> hom, const Hypergraph& g, const Rational& eps) {
  require(g.uniformity() == 2, "code_from_hom needs a graph (k = 2)");
  require(hom.size() == g.vertex_count(), "map must assign every vertex");
  require(!hom.empty(), "empty graph");
  const std::uint32_t q = hom.front().q;
  for (const auto& u : hom) require(u.q == q && u.data.size() == q * q, "map targets differ in q");
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    if (!gq_adjacent(hom[e[0]], hom[e[1]], eps))
      fail(ErrorKind::kInvalid, "not a homomorphism: edge " + std::to_string(e[0] + 1) + " " +
                                    std::to_string(e[1] + 1) + " maps to non-adjacent vertices");
  }
  std::vector<std::vector<Symbol>> columns;
  columns.reserve(hom.size());
  for (const auto& u : hom) columns.emplace_back(u.data.begin(), u.data.end());
  return Code::from_columns(q, 2, columns);
}

}  // namespace epc
