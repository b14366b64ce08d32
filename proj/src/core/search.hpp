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
#include <optional>
#include <string>
#include <vector>

#include "codes.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"
#include "universal.hpp"

namespace epc {

enum class SearchStatus { kFound, kAbsent, kUnknown };

const char* to_string(SearchStatus s);

struct SearchOptions {
  std::uint64_t budget = 10'000'000;  // search-tree nodes per alphabet size
  // Function-assignment search limits (k != 2).
  std::uint32_t max_generic_n = 5;
  std::uint32_t max_generic_q = 2;
  std::uint32_t max_generic_k = 3;
  // Use function assignment for k = 2 as well (cross-checks the two paths).
  bool function_search_for_graphs = false;
};

struct HomSearchResult {
  SearchStatus status = SearchStatus::kUnknown;
  std::vector<UniversalVertex> map;  // one target per vertex when found
  std::uint64_t nodes = 0;
};

// Homomorphism from the graph g into G_q (eps = 0, q <= 3) or G_{q,eps}
// (eps > 0, q = 2). Presence is equivalent to an alphabet-q code for g.
HomSearchResult hom_search(const Hypergraph& g, std::uint32_t q, const Rational& eps,
                           const SearchOptions& opts = {});

struct QExactResult {
  SearchStatus status = SearchStatus::kUnknown;  // kAbsent: nothing up to q_max
  std::uint32_t q = 0;
  std::optional<Code> witness;
  std::uint64_t nodes = 0;
  std::vector<std::pair<std::uint32_t, SearchStatus>> tried;
};

// Smallest alphabet in [2, q_max] admitting a code for g with per-edge error
// at most eps. The witness is re-verified before it is returned.
QExactResult q_exact(const Hypergraph& g, const Rational& eps, std::uint32_t q_max,
                     const SearchOptions& opts = {});

}  // namespace epc
