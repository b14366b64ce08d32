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
#include <memory>
#include <utility>
#include <vector>

#include "codes.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"
#include "universal.hpp"

namespace epc {

// Position i of the result repeats base position coloring(i). Exact (or
// eps-tolerant) on g whenever base is on the complete hypergraph over the
// colors; the verifiers certify that per instance.
Code compose(const Hypergraph& g, const Coloring& coloring, const Code& base);

struct ComposedCode {
  Code code;
  ChromaticResult coloring;
  std::uint32_t field_order;
};

// Colors g (exact mode under `budget`) and composes with the Reed-Solomon
// code over the smallest prime-power field that has enough evaluation points.
ComposedCode compose_with_rs(const Hypergraph& g,
                             std::uint64_t budget = kDefaultColoringBudget);

// Linear code whose columns are the normalized vectors of F^k, in the vertex
// order of pg_hypergraph.
Code pg_linear_code(std::shared_ptr<const GaloisField> field, std::uint32_t k);

// Vertex labels (group, copy), both 0-based: groups [p+1] with alpha copies
// each, plus copy alpha for the first r groups, assigned to vertices 1..n
// group by group.
std::vector<std::pair<std::uint32_t, std::uint32_t>> average_error_labels(std::uint32_t p,
                                                                         std::uint32_t n);
// Vertex with label (i, j) repeats column i of rs_code(GF(p), p + 1, 2).
Code average_error_code(std::uint32_t p, std::uint32_t n);
// 1 - (C(alpha,2)(p+1) + r alpha) / C(n,2): success if every same-group edge
// failed outright.
Rational average_error_lower_bound(std::uint32_t p, std::uint32_t n);

// Inverse of hom_from_code: column v is the vector of hom[v]. Every edge of g
// must map to an adjacent pair (G_q when eps = 0, else G_{q,eps}).
Code code_from_hom(std::span<const UniversalVertex> hom, const Hypergraph& g,
                   const Rational& eps = 0);

}  // namespace epc
