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

#include <doctest.h>

#include <random>
#include <vector>

#include "codes.hpp"
#include "construct.hpp"
#include "error.hpp"
#include "hypergraph.hpp"
#include "search.hpp"
#include "universal.hpp"

using epc::Hypergraph;
using epc::Rational;
using epc::SearchStatus;
using epc::Vertex;

namespace {

// Does any map V(g) -> targets preserve adjacency? Plain odometer over all maps.
bool brute_force_hom(const Hypergraph& g, const std::vector<epc::UniversalVertex>& targets, const Rational& eps) {
  const std::size_t t = targets.size();
  std::vector<std::vector<bool>> adj(t, std::vector<bool>(t));
  for (std::size_t a = 0; a < t; ++a)
    for (std::size_t b = 0; b < t; ++b) adj[a][b] = epc::gq_adjacent(targets[a], targets[b], eps);
  std::vector<std::size_t> map(g.vertex_count(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < g.edge_count() && ok; ++i) ok = adj[map[g.edge(i)[0]]][map[g.edge(i)[1]]];
    if (ok) return true;
    std::size_t pos = 0;
    while (pos < map.size() && ++map[pos] == t) map[pos++] = 0;
    if (pos == map.size()) return false;
  }
}

Hypergraph random_graph(std::mt19937_64& rng, std::uint32_t n, double p) {
  std::bernoulli_distribution keep(p);
  std::vector<std::vector<Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (keep(rng)) edges.push_back({a, b});
  return Hypergraph(n, 2, edges);
}

bool found(const epc::HomSearchResult& r) { return r.status == SearchStatus::kFound; }

}  // namespace

TEST_SUITE("search") {

TEST_CASE("homomorphism search examples") {
  auto k3 = epc::hom_search(epc::complete(3, 2), 2, 0);
  REQUIRE(found(k3));
  CHECK(epc::verify_exact(epc::code_from_hom(k3.map, epc::complete(3, 2)), epc::complete(3, 2)).valid);
  CHECK(epc::verify_exact(epc::rs_code(std::make_shared<epc::GaloisField>(2), 3, 2), epc::complete(3, 2)).valid);

  auto g2 = epc::enumerate_vertices(2, epc::VertexVariant::kBalanced);
  CHECK_FALSE(brute_force_hom(epc::complete(4, 2), g2, 0));
  CHECK(epc::hom_search(epc::complete(4, 2), 2, 0).status == SearchStatus::kAbsent);

  auto c4 = epc::hom_search(epc::cycle(4), 2, 0);
  REQUIRE(found(c4));
  CHECK(epc::gq_adjacent(c4.map[0], c4.map[1], 0));
  CHECK(c4.map[0] == c4.map[2]);
}

TEST_CASE("homomorphism search agrees with brute force") {
  auto g2 = epc::enumerate_vertices(2, epc::VertexVariant::kBalanced);
  auto u2 = epc::enumerate_vertices(2, epc::VertexVariant::kUnrestricted);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const std::uint32_t n = 3 + trial % 4;
    Hypergraph g = random_graph(rng, n, 0.3 + 0.1 * (trial % 6));
    INFO("trial " << trial << " edges=" << g.edge_count());
    auto exact = epc::hom_search(g, 2, 0);
    CHECK(found(exact) == brute_force_hom(g, g2, 0));
    if (found(exact)) CHECK(epc::verify_exact(epc::code_from_hom(exact.map, g), g).valid);
    if (n <= 5) {
      for (Rational eps : {Rational(1, 4), Rational(1, 2)}) {
        auto r = epc::hom_search(g, 2, eps);
        CHECK(found(r) == brute_force_hom(g, u2, eps));
        if (found(r)) CHECK(epc::verify_eps(epc::code_from_hom(r.map, g, eps), g, eps).valid);
      }
    }
  }
}

TEST_CASE("q_exact examples") {
  struct Case {
    const char* spec;
    std::uint32_t q;
  };
  for (Case c : {Case{"complete:3:2", 2}, Case{"complete:4:2", 3}, Case{"cycle:4", 2}, Case{"cycle:5", 2},
                 Case{"complete:3:3", 2}}) {
    Hypergraph g = epc::load_hypergraph(c.spec);
    auto r = epc::q_exact(g, 0, 3);
    INFO(c.spec);
    REQUIRE(r.status == SearchStatus::kFound);
    CHECK(r.q == c.q);
    REQUIRE(r.witness);
    CHECK(r.witness->alphabet_size() == c.q);
    CHECK(epc::verify_exact(*r.witness, g).valid);
  }
  auto k4 = epc::q_exact(epc::complete(4, 2), 0, 2);
  CHECK(k4.status == SearchStatus::kAbsent);
  CHECK_FALSE(k4.witness);
  // No rs-style witness below 3 points for K_4: n(2,2) = 3.
  CHECK_THROWS_AS(epc::rs_code(std::make_shared<epc::GaloisField>(2), 4, 2), epc::Error);
}

TEST_CASE("edgeless hypergraphs need alphabet 2") {
  auto r = epc::q_exact(Hypergraph(4, 3, {}), 0, 5);
  CHECK(r.status == SearchStatus::kFound);
  CHECK(r.q == 2);
  REQUIRE(r.witness);
  CHECK(epc::verify_exact(*r.witness, Hypergraph(4, 3, {})).valid);
}

TEST_CASE("isolated vertices map to the first vertex") {
  Hypergraph g(5, 2, {{0, 1}, {1, 2}});
  auto r = epc::hom_search(g, 3, 0);
  REQUIRE(found(r));
  CHECK(r.map[3] == epc::first_vertex(3, epc::VertexVariant::kBalanced));
  CHECK(r.map[4] == epc::first_vertex(3, epc::VertexVariant::kBalanced));
}

TEST_CASE("function assignment agrees with homomorphism search") {
  epc::SearchOptions generic;
  generic.function_search_for_graphs = true;
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    Hypergraph g = random_graph(rng, 3 + trial % 3, 0.5);
    for (Rational eps : {Rational(0), Rational(1, 4)}) {
      auto a = epc::q_exact(g, eps, 2);
      auto b = epc::q_exact(g, eps, 2, generic);
      CHECK(a.status == b.status);
      if (b.witness) CHECK(epc::verify_eps(*b.witness, g, eps).valid);
    }
  }
}

TEST_CASE("k = 3 instances") {
  auto single = epc::q_exact(Hypergraph(3, 3, {{0, 1, 2}}), 0, 2);
  REQUIRE(single.status == SearchStatus::kFound);
  CHECK(single.q == 2);
  auto k43 = epc::q_exact(Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}), 0, 2);
  REQUIRE(k43.status == SearchStatus::kFound);
  CHECK(epc::verify_exact(*k43.witness, epc::complete(4, 3)).valid);
  // Five positions, all triples: needs an MDS [5,3] code, impossible in binary.
  auto k53 = epc::q_exact(epc::complete(5, 3), 0, 2);
  CHECK(k53.status == SearchStatus::kAbsent);
  auto k53eps = epc::q_exact(epc::complete(5, 3), Rational(1, 2), 2);
  REQUIRE(k53eps.status == SearchStatus::kFound);
  CHECK(epc::verify_eps(*k53eps.witness, epc::complete(5, 3), Rational(1, 2)).valid);
}

TEST_CASE("monotonicity on random graphs") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 4 + trial % 3;
    Hypergraph g = random_graph(rng, n, 0.5);
    auto exact = epc::q_exact(g, 0, 3);
    REQUIRE(exact.status == SearchStatus::kFound);
    // Larger eps never needs a larger alphabet.
    auto loose = epc::q_exact(g, Rational(1, 4), 2);
    if (exact.q == 2) CHECK(loose.status == SearchStatus::kFound);
    // Adding an edge never lowers q.
    std::vector<std::vector<Vertex>> edges;
    for (std::size_t i = 0; i < g.edge_count(); ++i) edges.push_back({g.edge(i)[0], g.edge(i)[1]});
    Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
    if (a == b) continue;
    edges.push_back({a, b});
    Hypergraph bigger(n, 2, edges);
    auto more = epc::q_exact(bigger, 0, 3);
    if (more.status == SearchStatus::kFound) CHECK(more.q >= exact.q);
    else CHECK(more.status == SearchStatus::kAbsent);
  }
}

TEST_CASE("budget and caps") {
  epc::SearchOptions tiny;
  tiny.budget = 1;
  auto r = epc::hom_search(epc::complete(4, 2), 3, 0, tiny);
  CHECK(r.status == SearchStatus::kUnknown);
  auto q = epc::q_exact(epc::complete(4, 2), 0, 3, tiny);
  CHECK(q.status == SearchStatus::kUnknown);

  try {
    epc::q_exact(epc::complete(5, 2), 0, 4);
    FAIL("expected cap exceeded");
  } catch (const epc::Error& e) {
    CHECK(e.kind() == epc::ErrorKind::kCapExceeded);
  }
  CHECK_THROWS_AS(epc::hom_search(epc::complete(3, 2), 3, Rational(1, 3)), epc::Error);
  CHECK_THROWS_AS(epc::q_exact(epc::complete(6, 3), 0, 2), epc::Error);
  CHECK_THROWS_AS(epc::hom_search(epc::complete(3, 3), 2, 0), epc::Error);
  CHECK_THROWS_AS(epc::q_exact(epc::complete(3, 2), 1, 2), epc::Error);
}

}  // TEST_SUITE
