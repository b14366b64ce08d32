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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"

namespace epc {

enum class VertexVariant {
  kBalanced,      // every symbol exactly q times
  kUnrestricted,  // any vector in [q]^{q^2}
  kPermBlocks,    // q consecutive blocks, each a permutation of [q]
  kCyclicShifts,  // block i = (r_i, r_i + 1, ..., r_i + q - 1) mod q
};

// A function F^2 -> F written as a vector of length q^2; entry m1 * q + m2
// holds the value at message (m1, m2).
struct UniversalVertex {
  std::uint32_t q = 0;
  VertexVariant variant = VertexVariant::kUnrestricted;
  std::vector<std::uint16_t> data;
  std::vector<std::uint16_t> shifts;  // kCyclicShifts only, length q

  friend bool operator==(const UniversalVertex&, const UniversalVertex&) = default;
};

// Validates the variant's invariant.
UniversalVertex make_vertex(std::uint32_t q, VertexVariant variant, std::vector<std::uint16_t> data);
UniversalVertex cyclic_vertex(std::uint32_t q, std::vector<std::uint16_t> shifts);
bool is_balanced(std::span<const std::uint16_t> data, std::uint32_t q);

// Digits when q <= 10, comma separated otherwise.
std::string format_vertex(const UniversalVertex& u);

// |{(u_i, v_i)}| over all coordinates.
std::uint32_t distinct_pairs(const UniversalVertex& u, const UniversalVertex& v);
// Adjacent iff distinct_pairs >= (1 - eps) q^2. eps = 0 is G_q and requires
// balanced vectors.
bool gq_adjacent(const UniversalVertex& u, const UniversalVertex& v, const Rational& eps);
// Shift-tuple shortcut for cyclic vertices: u - v takes at least q - 1 values.
bool cyclic_adjacent_by_difference(const UniversalVertex& u, const UniversalVertex& v);

// Closed-form vertex counts.
BigInt vertex_count(std::uint32_t q, VertexVariant variant);
// Lexicographic stream; throws kCapExceeded above the per-variant cap
// (balanced q <= 3, perm-blocks q <= 3, cyclic q <= 6, unrestricted q <= 2).
void for_each_vertex(std::uint32_t q, VertexVariant variant,
                     const std::function<void(const UniversalVertex&)>& fn);
std::vector<UniversalVertex> enumerate_vertices(std::uint32_t q, VertexVariant variant);
// First vertex of the lexicographic stream, without the cap.
UniversalVertex first_vertex(std::uint32_t q, VertexVariant variant);
// Uniform vertex of the variant.
UniversalVertex random_vertex(std::uint32_t q, VertexVariant variant, std::mt19937_64& rng);

enum class CoverFamily {
  kGq,           // G_q, sets A_{i,j}, i < j <= q + 1
  kHq,           // H_q, sets A_{1,q+i}
  kHqCyclicEps,  // cyclic subgraph of G_{q,1/q}, shift differences (i, j)
  kHqEps,        // perm-block subgraph of G_{q,1/q}
  kGqEps,        // G_{q,1/q}, pairings inside [3q+1]
};

VertexVariant family_variant(CoverFamily family);
Rational family_epsilon(std::uint32_t q, CoverFamily family);

struct CanonicalSet {
  enum class Kind { kEqualPairs, kShiftDifference };
  Kind kind = Kind::kEqualPairs;
  // kEqualPairs: 0-based coordinate pairs (a, b), a < b, with u_a = u_b.
  std::vector<std::pair<std::uint16_t, std::uint16_t>> pairs;
  // kShiftDifference: u_1 - u_2 = first, u_1 - u_3 = second (mod q).
  std::pair<std::uint16_t, std::uint16_t> difference{0, 0};

  bool contains(const UniversalVertex& u) const;
  std::string describe() const;  // 1-based
  friend bool operator==(const CanonicalSet&, const CanonicalSet&) = default;
};

BigInt cover_size(std::uint32_t q, CoverFamily family);
std::vector<CanonicalSet> canonical_cover(std::uint32_t q, CoverFamily family);

// Color of each vertex = index of the first covering set.
Coloring coloring_from_cover(std::span<const CanonicalSet> cover,
                             std::span<const UniversalVertex> vertices);

// Simple graph induced on `vertices` under gq_adjacent(., ., eps).
Hypergraph universal_graph(std::span<const UniversalVertex> vertices, const Rational& eps,
                           unsigned jobs = 1);

// Bitset adjacency over a vertex list, immutable once built.
class AdjacencyMatrix {
 public:
  AdjacencyMatrix(std::span<const UniversalVertex> vertices, const Rational& eps, unsigned jobs = 1);

  std::size_t size() const noexcept { return n_; }
  bool adjacent(std::size_t a, std::size_t b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1u;
  }
  std::span<const std::uint64_t> row(std::size_t a) const {
    return std::span<const std::uint64_t>(rows_).subspan(a * words_, words_);
  }
  std::size_t words() const noexcept { return words_; }
  std::size_t degree(std::size_t a) const;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
};

// G_3: its 1680 balanced vertices and adjacency, built once per process.
const std::vector<UniversalVertex>& g3_vertices();
const AdjacencyMatrix& g3_adjacency();

// Columns of an exact code for the complete graph as balanced vertices.
std::vector<UniversalVertex> clique_from_mds(const Code& c);

// Column functions of a code valid for the k=2 hypergraph g (exactly when
// eps = 0, else per-edge eps); isolated vertices go to first_vertex.
std::vector<UniversalVertex> hom_from_code(const Code& c, const Hypergraph& g, const Rational& eps);

// Gq: first A_{i,j} (i < j <= q+1) containing u. GqEps: q + 1 disjoint equal
// pairs inside [3q+1] by iterated pigeonhole over growing windows; nullopt
// when a window has no repeated symbol (possible only for q < 4).
std::optional<CanonicalSet> find_canonical_home(const UniversalVertex& u, CoverFamily family);

// P[y_i = y_j] for fixed i != j and a uniform balanced y in [k]^{nk}.
Rational balanced_collision_probability(std::uint32_t n, std::uint32_t k);

}  // namespace epc
