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

#include "universal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "combinatorics.hpp"
#include "error.hpp"
#include "parallel.hpp"

namespace epc {

namespace {

constexpr std::uint32_t kMaxUniversalQ = 256;

void check_q(std::uint32_t q) {
  require(q >= 2 && q <= kMaxUniversalQ, "universal graphs need 2 <= q <= 256");
}

bool is_permutation_block(std::span<const std::uint16_t> block, std::uint32_t q) {
  std::vector<bool> seen(q, false);
  for (auto s : block) {
    if (s >= q || seen[s]) return false;
    seen[s] = true;
  }
  return true;
}

}  // namespace

bool is_balanced(std::span<const std::uint16_t> data, std::uint32_t q) {
  if (data.size() != static_cast<std::size_t>(q) * q) return false;
  std::vector<std::uint32_t> count(q, 0);
  for (auto s : data) {
    if (s >= q) return false;
    ++count[s];
  }
  return std::all_of(count.begin(), count.end(), [&](std::uint32_t c) { return c == q; });
}

UniversalVertex make_vertex(std::uint32_t q, VertexVariant variant, std::vector<std::uint16_t> data) {
  check_q(q);
  require(data.size() == static_cast<std::size_t>(q) * q, "vertex must have length q^2");
  for (auto s : data) require(s < q, "vertex symbol out of range");
  UniversalVertex u{q, variant, std::move(data), {}};
  switch (variant) {
    case VertexVariant::kUnrestricted:
      break;
    case VertexVariant::kBalanced:
      require(is_balanced(u.data, q), "vertex is not balanced");
      break;
    case VertexVariant::kPermBlocks:
      for (std::uint32_t b = 0; b < q; ++b)
        require(is_permutation_block(std::span(u.data).subspan(b * q, q), q),
                "block " + std::to_string(b + 1) + " is not a permutation");
      break;
    case VertexVariant::kCyclicShifts: {
      std::vector<std::uint16_t> shifts(q);
      for (std::uint32_t b = 0; b < q; ++b) {
        shifts[b] = u.data[b * q];
        for (std::uint32_t t = 0; t < q; ++t)
          require(u.data[b * q + t] == (shifts[b] + t) % q,
                  "block " + std::to_string(b + 1) + " is not an ascending cyclic shift");
      }
      u.shifts = std::move(shifts);
      break;
    }
  }
  return u;
}

UniversalVertex cyclic_vertex(std::uint32_t q, std::vector<std::uint16_t> shifts) {
  check_q(q);
  require(shifts.size() == q, "cyclic vertex needs q shifts");
  UniversalVertex u{q, VertexVariant::kCyclicShifts, std::vector<std::uint16_t>(q * q), {}};
  for (std::uint32_t b = 0; b < q; ++b) {
    require(shifts[b] < q, "shift out of range");
    for (std::uint32_t t = 0; t < q; ++t) u.data[b * q + t] = static_cast<std::uint16_t>((shifts[b] + t) % q);
  }
  u.shifts = std::move(shifts);
  return u;
}

std::string format_vertex(const UniversalVertex& u) {
  std::string s;
  for (std::size_t i = 0; i < u.data.size(); ++i) {
    if (u.q > 10 && i > 0) s += ',';
    s += std::to_string(u.data[i]);
  }
  return s;
}

std::uint32_t distinct_pairs(const UniversalVertex& u, const UniversalVertex& v) {
  require(u.q == v.q, "vertices over different alphabets");
  require(u.data.size() == v.data.size(), "vertex length mismatch");
  const std::uint32_t q = u.q;
  if (q * q <= 64) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < u.data.size(); ++i) mask |= std::uint64_t{1} << (u.data[i] * q + v.data[i]);
    return static_cast<std::uint32_t>(__builtin_popcountll(mask));
  }
  std::vector<bool> seen(static_cast<std::size_t>(q) * q, false);
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < u.data.size(); ++i) {
    auto slot = seen[u.data[i] * q + v.data[i]];
    if (!slot) {
      slot = true;
      ++count;
    }
  }
  return count;
}

bool gq_adjacent(const UniversalVertex& u, const UniversalVertex& v, const Rational& eps) {
  require(eps >= 0 && eps < 1, "epsilon must satisfy 0 <= eps < 1");
  const std::uint32_t q2 = u.q * u.q;
  if (eps == 0) {
    require(is_balanced(u.data, u.q) && is_balanced(v.data, v.q),
            "G_q adjacency needs balanced vertices");
    return distinct_pairs(u, v) == q2;
  }
  return Rational(distinct_pairs(u, v)) >= (1 - eps) * q2;
}

bool cyclic_adjacent_by_difference(const UniversalVertex& u, const UniversalVertex& v) {
  require(u.variant == VertexVariant::kCyclicShifts && v.variant == VertexVariant::kCyclicShifts,
          "shortcut needs cyclic vertices");
  require(u.q == v.q, "vertices over different alphabets");
  std::vector<bool> seen(u.q, false);
  std::uint32_t values = 0;
  for (std::uint32_t i = 0; i < u.q; ++i) {
    const std::uint32_t d = (u.shifts[i] + u.q - v.shifts[i]) % u.q;
    if (!seen[d]) {
      seen[d] = true;
      ++values;
    }
  }
  return values + 1 >= u.q;
}

BigInt vertex_count(std::uint32_t q, VertexVariant variant) {
  check_q(q);
  switch (variant) {
    case VertexVariant::kBalanced:
      return factorial(q * q) / boost::multiprecision::pow(factorial(q), q);
    case VertexVariant::kUnrestricted:
      return boost::multiprecision::pow(BigInt(q), q * q);
    case VertexVariant::kPermBlocks:
      return boost::multiprecision::pow(factorial(q), q);
    case VertexVariant::kCyclicShifts:
      return boost::multiprecision::pow(BigInt(q), q);
  }
  return 0;
}

namespace {

std::uint32_t enumeration_cap(VertexVariant variant) {
  switch (variant) {
    case VertexVariant::kBalanced: return 3;
    case VertexVariant::kPermBlocks: return 3;
    case VertexVariant::kCyclicShifts: return 6;
    case VertexVariant::kUnrestricted: return 2;
  }
  return 0;
}

const char* variant_name(VertexVariant variant) {
  switch (variant) {
    case VertexVariant::kBalanced: return "balanced";
    case VertexVariant::kPermBlocks: return "perm-blocks";
    case VertexVariant::kCyclicShifts: return "cyclic-shifts";
    case VertexVariant::kUnrestricted: return "unrestricted";
  }
  return "?";
}

}  // namespace

void for_each_vertex(std::uint32_t q, VertexVariant variant,
                     const std::function<void(const UniversalVertex&)>& fn) {
  check_q(q);
  if (q > enumeration_cap(variant))
    fail(ErrorKind::kCapExceeded, std::string("enumerating ") + variant_name(variant) +
                                      " vertices is capped at q <= " +
                                      std::to_string(enumeration_cap(variant)));
  const std::uint32_t len = q * q;
  switch (variant) {
    case VertexVariant::kBalanced: {
      std::vector<std::uint16_t> v(len);
      for (std::uint32_t i = 0; i < len; ++i) v[i] = static_cast<std::uint16_t>(i / q);
      do fn(UniversalVertex{q, variant, v, {}});
      while (std::next_permutation(v.begin(), v.end()));
      break;
    }
    case VertexVariant::kUnrestricted: {
      std::vector<std::uint32_t> digits(len, 0);
      do {
        fn(UniversalVertex{q, variant, std::vector<std::uint16_t>(digits.begin(), digits.end()), {}});
      } while (next_tuple(digits, q));
      break;
    }
    case VertexVariant::kPermBlocks: {
      std::vector<std::vector<std::uint16_t>> perms;
      std::vector<std::uint16_t> p(q);
      std::iota(p.begin(), p.end(), 0);
      do perms.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      std::vector<std::uint32_t> choice(q, 0);
      do {
        std::vector<std::uint16_t> v;
        v.reserve(len);
        for (auto c : choice) v.insert(v.end(), perms[c].begin(), perms[c].end());
        fn(UniversalVertex{q, variant, std::move(v), {}});
      } while (next_tuple(choice, static_cast<std::uint32_t>(perms.size())));
      break;
    }
    case VertexVariant::kCyclicShifts: {
      std::vector<std::uint32_t> shifts(q, 0);
      do fn(cyclic_vertex(q, std::vector<std::uint16_t>(shifts.begin(), shifts.end())));
      while (next_tuple(shifts, q));
      break;
    }
  }
}

UniversalVertex random_vertex(std::uint32_t q, VertexVariant variant, std::mt19937_64& rng) {
  check_q(q);
  std::uniform_int_distribution<std::uint32_t> symbol(0, q - 1);
  std::vector<std::uint16_t> data(q * q);
  switch (variant) {
    case VertexVariant::kBalanced:
      for (std::uint32_t i = 0; i < q * q; ++i) data[i] = static_cast<std::uint16_t>(i / q);
      std::shuffle(data.begin(), data.end(), rng);
      break;
    case VertexVariant::kUnrestricted:
      for (auto& x : data) x = static_cast<std::uint16_t>(symbol(rng));
      break;
    case VertexVariant::kPermBlocks:
      for (std::uint32_t b = 0; b < q; ++b) {
        for (std::uint32_t t = 0; t < q; ++t) data[b * q + t] = static_cast<std::uint16_t>(t);
        std::shuffle(data.begin() + b * q, data.begin() + (b + 1) * q, rng);
      }
      break;
    case VertexVariant::kCyclicShifts: {
      std::vector<std::uint16_t> shifts(q);
      for (auto& x : shifts) x = static_cast<std::uint16_t>(symbol(rng));
      return cyclic_vertex(q, std::move(shifts));
    }
  }
  return make_vertex(q, variant, std::move(data));
}

std::vector<UniversalVertex> enumerate_vertices(std::uint32_t q, VertexVariant variant) {
  std::vector<UniversalVertex> out;
  for_each_vertex(q, variant, [&](const UniversalVertex& u) { out.push_back(u); });
  return out;
}

UniversalVertex first_vertex(std::uint32_t q, VertexVariant variant) {
  check_q(q);
  std::vector<std::uint16_t> v(q * q, 0);
  switch (variant) {
    case VertexVariant::kUnrestricted:
      break;
    case VertexVariant::kBalanced:
      for (std::uint32_t i = 0; i < q * q; ++i) v[i] = static_cast<std::uint16_t>(i / q);
      break;
    case VertexVariant::kPermBlocks:
      for (std::uint32_t i = 0; i < q * q; ++i) v[i] = static_cast<std::uint16_t>(i % q);
      break;
    case VertexVariant::kCyclicShifts:
      return cyclic_vertex(q, std::vector<std::uint16_t>(q, 0));
  }
  return UniversalVertex{q, variant, std::move(v), {}};
}

VertexVariant family_variant(CoverFamily family) {
  switch (family) {
    case CoverFamily::kGq: return VertexVariant::kBalanced;
    case CoverFamily::kHq: return VertexVariant::kPermBlocks;
    case CoverFamily::kHqCyclicEps: return VertexVariant::kCyclicShifts;
    case CoverFamily::kHqEps: return VertexVariant::kPermBlocks;
    case CoverFamily::kGqEps: return VertexVariant::kUnrestricted;
  }
  return VertexVariant::kUnrestricted;
}

Rational family_epsilon(std::uint32_t q, CoverFamily family) {
  if (family == CoverFamily::kGq || family == CoverFamily::kHq) return 0;
  return Rational(1, q);
}

bool CanonicalSet::contains(const UniversalVertex& u) const {
  if (kind == Kind::kShiftDifference) {
    if (u.variant != VertexVariant::kCyclicShifts || u.shifts.size() < 3) return false;
    const std::uint32_t q = u.q;
    return (u.shifts[0] + q - u.shifts[1]) % q == difference.first &&
           (u.shifts[0] + q - u.shifts[2]) % q == difference.second;
  }
  for (auto [a, b] : pairs) {
    if (a >= u.data.size() || b >= u.data.size() || u.data[a] != u.data[b]) return false;
  }
  return true;
}

std::string CanonicalSet::describe() const {
  std::ostringstream out;
  if (kind == Kind::kShiftDifference) {
    out << "diff " << difference.first << ' ' << difference.second;
  } else {
    out << "pairs";
    for (auto [a, b] : pairs) out << ' ' << a + 1 << ',' << b + 1;
  }
  return out.str();
}

namespace {

void check_cover_q(std::uint32_t q, CoverFamily family) {
  check_q(q);
  switch (family) {
    case CoverFamily::kGq:
    case CoverFamily::kHq:
      break;
    case CoverFamily::kHqCyclicEps:
    case CoverFamily::kHqEps:
      if (q < 3) fail(ErrorKind::kArgument, "this cover needs q >= 3");
      break;
    case CoverFamily::kGqEps:
      if (q < 4) fail(ErrorKind::kArgument, "the G_{q,1/q} cover needs q >= 4");
      break;
  }
}

// All perfect matchings of `items` (ascending); each matching lists pairs by
// their smaller element.
void for_each_pairing(std::vector<std::uint16_t>& items, std::vector<bool>& used,
                      std::vector<std::pair<std::uint16_t, std::uint16_t>>& acc,
                      const std::function<void()>& emit) {
  std::size_t first = 0;
  while (first < items.size() && used[first]) ++first;
  if (first == items.size()) {
    emit();
    return;
  }
  used[first] = true;
  for (std::size_t j = first + 1; j < items.size(); ++j) {
    if (used[j]) continue;
    used[j] = true;
    acc.emplace_back(items[first], items[j]);
    for_each_pairing(items, used, acc, emit);
    acc.pop_back();
    used[j] = false;
  }
  used[first] = false;
}

constexpr std::uint64_t kMaxCoverSets = 1'000'000;

}  // namespace

BigInt cover_size(std::uint32_t q, CoverFamily family) {
  check_cover_q(q, family);
  switch (family) {
    case CoverFamily::kGq: return binomial(q + 1, 2);
    case CoverFamily::kHq: return q;
    case CoverFamily::kHqCyclicEps: return BigInt(q) * q;
    case CoverFamily::kHqEps: return factorial(q) * q;
    case CoverFamily::kGqEps: {
      const unsigned m = q + 1;
      return binomial(3 * q + 1, 2 * m) * factorial(2 * m) /
             (boost::multiprecision::pow(BigInt(2), m) * factorial(m));
    }
  }
  return 0;
}

std::vector<CanonicalSet> canonical_cover(std::uint32_t q, CoverFamily family) {
  if (cover_size(q, family) > kMaxCoverSets)
    fail(ErrorKind::kCapExceeded, "cover has more than " + std::to_string(kMaxCoverSets) + " sets");
  using Kind = CanonicalSet::Kind;
  std::vector<CanonicalSet> cover;
  auto pair_set = [](std::vector<std::pair<std::uint16_t, std::uint16_t>> pairs) {
    return CanonicalSet{Kind::kEqualPairs, std::move(pairs), {0, 0}};
  };
  switch (family) {
    case CoverFamily::kGq:
      for (std::uint16_t i = 0; i <= q; ++i)
        for (std::uint16_t j = i + 1; j <= q; ++j) cover.push_back(pair_set({{i, j}}));
      break;
    case CoverFamily::kHq:
      for (std::uint16_t i = 0; i < q; ++i)
        cover.push_back(pair_set({{0, static_cast<std::uint16_t>(q + i)}}));
      break;
    case CoverFamily::kHqCyclicEps:
      for (std::uint16_t i = 0; i < q; ++i)
        for (std::uint16_t j = 0; j < q; ++j) cover.push_back(CanonicalSet{Kind::kShiftDifference, {}, {i, j}});
      break;
    case CoverFamily::kHqEps: {
      std::vector<std::uint16_t> perm(q);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        for (std::uint16_t last = 0; last < q; ++last) {
          std::vector<std::pair<std::uint16_t, std::uint16_t>> pairs;
          for (std::uint16_t a = 0; a < q; ++a)
            pairs.emplace_back(a, static_cast<std::uint16_t>(q + perm[a]));
          pairs.emplace_back(0, static_cast<std::uint16_t>(2 * q + last));
          cover.push_back(pair_set(std::move(pairs)));
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      break;
    }
    case CoverFamily::kGqEps: {
      const std::uint32_t m = q + 1;
      for_each_combination(3 * q + 1, 2 * m, [&](std::span<const std::uint32_t> subset) {
        std::vector<std::uint16_t> items(subset.begin(), subset.end());
        std::vector<bool> used(items.size(), false);
        std::vector<std::pair<std::uint16_t, std::uint16_t>> acc;
        for_each_pairing(items, used, acc, [&] { cover.push_back(pair_set(acc)); });
        return true;
      });
      break;
    }
  }
  return cover;
}

Coloring coloring_from_cover(std::span<const CanonicalSet> cover,
                             std::span<const UniversalVertex> vertices) {
  Coloring c;
  c.colors.resize(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto it = std::find_if(cover.begin(), cover.end(),
                           [&](const CanonicalSet& s) { return s.contains(vertices[i]); });
    if (it == cover.end())
      fail(ErrorKind::kInvalid, "vertex " + format_vertex(vertices[i]) + " is not covered");
    c.colors[i] = static_cast<std::uint32_t>(it - cover.begin());
  }
  c.num_colors = static_cast<std::uint32_t>(cover.size());
  return c;
}

AdjacencyMatrix::AdjacencyMatrix(std::span<const UniversalVertex> vertices, const Rational& eps,
                                 unsigned jobs)
    : n_(vertices.size()), words_((vertices.size() + 63) / 64), rows_(n_ * words_, 0) {
  require(eps >= 0 && eps < 1, "epsilon must satisfy 0 <= eps < 1");
  if (n_ == 0) return;
  const std::uint32_t q = vertices.front().q;
  if (eps == 0)
    for (const auto& u : vertices) require(is_balanced(u.data, q), "G_q adjacency needs balanced vertices");
  // Integer threshold on distinct pairs.
  const Rational need = (1 - eps) * (q * q);
  const BigInt num = boost::multiprecision::numerator(need), den = boost::multiprecision::denominator(need);
  const auto threshold = static_cast<std::uint32_t>((num + den - 1) / den);
  parallel_for(n_, jobs, [&](std::size_t a) {
    for (std::size_t b = 0; b < n_; ++b)
      if (distinct_pairs(vertices[a], vertices[b]) >= threshold)
        rows_[a * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  });
}

std::size_t AdjacencyMatrix::degree(std::size_t a) const {
  std::size_t d = 0;
  for (auto w : row(a)) d += static_cast<std::size_t>(__builtin_popcountll(w));
  return d;
}

Hypergraph universal_graph(std::span<const UniversalVertex> vertices, const Rational& eps, unsigned jobs) {
  AdjacencyMatrix adj(vertices, eps, jobs);
  std::vector<Vertex> flat;
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (std::size_t b = a + 1; b < adj.size(); ++b)
      if (adj.adjacent(a, b)) {
        flat.push_back(static_cast<Vertex>(a));
        flat.push_back(static_cast<Vertex>(b));
      }
  return Hypergraph::from_flat(static_cast<std::uint32_t>(vertices.size()), 2, std::move(flat));
}

const std::vector<UniversalVertex>& g3_vertices() {
  static const std::vector<UniversalVertex> vs = enumerate_vertices(3, VertexVariant::kBalanced);
  return vs;
}

const AdjacencyMatrix& g3_adjacency() {
  static const AdjacencyMatrix adj(g3_vertices(), Rational(0));
  return adj;
}

namespace {

UniversalVertex column_vertex(const Code& c, std::uint32_t j, VertexVariant variant) {
  const auto col = c.column(j);
  return make_vertex(c.alphabet_size(), variant, std::vector<std::uint16_t>(col.begin(), col.end()));
}

void require_pairs_code(const Code& c) {
  require(c.dimension() == 2, "universal graphs model codes with k = 2");
  require(c.alphabet_size() <= kMaxUniversalQ, "alphabet too large for universal vertices");
  if (!c.has_table()) fail(ErrorKind::kCapExceeded, "code table not materialized");
}

}  // namespace

std::vector<UniversalVertex> clique_from_mds(const Code& c) {
  require_pairs_code(c);
  for (std::uint32_t a = 0; a < c.length(); ++a)
    for (std::uint32_t b = a + 1; b < c.length(); ++b) {
      const Vertex e[2] = {a, b};
      if (edge_success(c, e) != 1)
        fail(ErrorKind::kInvalid, "code is not MDS: positions " + std::to_string(a + 1) + " and " +
                                      std::to_string(b + 1) + " do not determine the message");
    }
  std::vector<UniversalVertex> out;
  for (std::uint32_t j = 0; j < c.length(); ++j) {
    // A single column (n = 1) need not be balanced; keep it unrestricted then.
    const auto col = c.column(j);
    std::vector<std::uint16_t> data(col.begin(), col.end());
    const auto variant = is_balanced(data, c.alphabet_size()) ? VertexVariant::kBalanced
                                                              : VertexVariant::kUnrestricted;
    out.push_back(make_vertex(c.alphabet_size(), variant, std::move(data)));
  }
  return out;
}

std::vector<UniversalVertex> hom_from_code(const Code& c, const Hypergraph& g, const Rational& eps) {
  require_pairs_code(c);
  const Certificate cert = eps == 0 ? verify_exact(c, g) : verify_eps(c, g, eps);
  if (!cert.valid) fail(ErrorKind::kInvalid, "code is not valid for the hypergraph");
  const auto variant = eps == 0 ? VertexVariant::kBalanced : VertexVariant::kUnrestricted;
  const auto iso = g.isolated();
  std::vector<UniversalVertex> out;
  out.reserve(c.length());
  for (std::uint32_t v = 0; v < c.length(); ++v)
    out.push_back(iso[v] ? first_vertex(c.alphabet_size(), variant) : column_vertex(c, v, variant));
  return out;
}

std::optional<CanonicalSet> find_canonical_home(const UniversalVertex& u, CoverFamily family) {
  const std::uint32_t q = u.q;
  const std::size_t len = u.data.size();
  auto first_equal_pair = [&](std::size_t window, const std::vector<bool>& used)
      -> std::optional<std::pair<std::uint16_t, std::uint16_t>> {
    window = std::min(window, len);
    for (std::size_t i = 0; i < window; ++i) {
      if (used[i]) continue;
      for (std::size_t j = i + 1; j < window; ++j)
        if (!used[j] && u.data[i] == u.data[j])
          return std::make_pair(static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j));
    }
    return std::nullopt;
  };
  std::vector<bool> used(len, false);
  switch (family) {
    case CoverFamily::kGq: {
      auto p = first_equal_pair(q + 1, used);
      if (!p) return std::nullopt;
      return CanonicalSet{CanonicalSet::Kind::kEqualPairs, {*p}, {0, 0}};
    }
    case CoverFamily::kGqEps: {
      CanonicalSet s;
      for (std::uint32_t t = 0; t <= q; ++t) {
        auto p = first_equal_pair(q + 1 + 2 * t, used);
        if (!p) return std::nullopt;
        used[p->first] = used[p->second] = true;
        s.pairs.push_back(*p);
      }
      std::sort(s.pairs.begin(), s.pairs.end());
      return s;
    }
    default:
      fail(ErrorKind::kArgument, "canonical homes are defined for G_q and G_{q,1/q} only");
  }
}

Rational balanced_collision_probability(std::uint32_t n, std::uint32_t k) {
  require(n >= 1 && k >= 1, "need n, k >= 1");
  if (static_cast<std::uint64_t>(n) * k < 2) fail(ErrorKind::kArgument, "need nk >= 2");
  return Rational(n - 1, static_cast<std::uint64_t>(n) * k - 1);
}

}  // namespace epc
