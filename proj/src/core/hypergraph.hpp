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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epc {

class GaloisField;

// Vertices are 0-based internally and 1-based in files and reports.
using Vertex = std::uint32_t;

// k-uniform hypergraph on [n]. Edges are stored sorted within each edge,
// lexicographically across edges, without duplicates, in one flat array.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Normalizes (sort + dedup) and validates the edge list.
  Hypergraph(std::uint32_t n, std::uint32_t k, std::vector<std::vector<Vertex>> edges);
  // Same, from a flat array of edge_count * k vertex ids.
  static Hypergraph from_flat(std::uint32_t n, std::uint32_t k, std::vector<Vertex> flat);

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::uint32_t uniformity() const noexcept { return k_; }
  std::size_t edge_count() const noexcept { return k_ == 0 ? 0 : flat_.size() / k_; }
  std::span<const Vertex> edge(std::size_t i) const {
    return std::span<const Vertex>(flat_).subspan(i * k_, k_);
  }
  // `e` need not be sorted.
  bool contains(std::span<const Vertex> e) const;

  // Vertices that lie in no edge.
  std::vector<bool> isolated() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::uint32_t n_ = 0;
  std::uint32_t k_ = 0;
  std::vector<Vertex> flat_;
};

struct Coloring {
  std::vector<std::uint32_t> colors;  // 0-based color per vertex
  std::uint32_t num_colors = 0;
};

// Caps for builders that can blow up.
inline constexpr std::size_t kMaxEdges = 20'000'000;
inline constexpr std::uint32_t kMaxPgVertices = 4096;

Hypergraph complete(std::uint32_t n, std::uint32_t k);
Hypergraph cycle(std::uint32_t n);
// 3-subsets of [7] that are not lines of the Fano plane, with vertex i
// labeled by the binary column (v1_i, v2_i, v3_i) of the Fano code's
// generator rows.
Hypergraph fano_complement();
// Generator rows of the Fano code; vertex i of fano_complement() carries
// column i.
const std::vector<std::vector<std::uint32_t>>& fano_generator_rows();

// Normalized vectors of F^k (leading nonzero entry 1), lexicographic.
std::vector<std::vector<std::uint32_t>> normalized_vectors(const GaloisField& f, std::uint32_t k);
// Vertices = normalized vectors; edges = linearly independent k-sets.
Hypergraph pg_hypergraph(const GaloisField& f, std::uint32_t k,
                         std::uint32_t max_vertices = kMaxPgVertices);

Hypergraph two_section(const Hypergraph& g);

bool validate_coloring(const Hypergraph& g, const Coloring& c);

enum class ChromaticMode { kExact, kGreedy };
enum class SolveStatus { kExact, kBoundOnly };

struct ChromaticResult {
  Coloring coloring;
  std::uint32_t lower_bound = 0;
  SolveStatus status = SolveStatus::kBoundOnly;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;

// Strong chromatic number via the 2-section. Exact mode runs DSATUR
// branch-and-bound with a search-node budget; on exhaustion the best coloring
// found is returned with status kBoundOnly. Greedy mode colors in descending
// 2-section degree order and never claims exactness unless the clique bound
// meets it.
ChromaticResult strong_chromatic(const Hypergraph& g, ChromaticMode mode,
                                 std::uint64_t budget = kDefaultColoringBudget);

// Text format: "<n> <k>" then one edge per line (1-based ids); '#' comments.
Hypergraph parse_hypergraph(std::string_view text);
std::string format_hypergraph(const Hypergraph& g);

// Built-in shorthand (complete:n:k, cycle:n, fano-complement, pg:q:k) or a
// file path.
Hypergraph load_hypergraph(const std::string& spec);

}  // namespace epc
