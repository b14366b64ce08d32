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

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "codes.hpp"
#include "construct.hpp"
#include "error.hpp"
#include "galois.hpp"
#include "hypergraph.hpp"
#include "universal.hpp"

using epc::CoverFamily;
using epc::Rational;
using epc::UniversalVertex;
using epc::VertexVariant;

namespace {

std::shared_ptr<const epc::GaloisField> gf(std::uint32_t q) { return std::make_shared<epc::GaloisField>(q); }

UniversalVertex vec(std::uint32_t q, const std::string& digits, VertexVariant v = VertexVariant::kBalanced) {
  std::vector<std::uint16_t> d;
  for (char c : digits) d.push_back(static_cast<std::uint16_t>(c - '0'));
  return epc::make_vertex(q, v, d);
}

// Distinct coordinate pairs, counted from plain vectors.
std::size_t pair_count(const std::vector<std::uint16_t>& a, const std::vector<std::uint16_t>& b) {
  std::set<std::pair<int, int>> s;
  for (std::size_t i = 0; i < a.size(); ++i) s.emplace(a[i], b[i]);
  return s.size();
}

// Chromatic number by trying k = 1, 2, ... with plain backtracking.
bool colorable(const std::vector<std::vector<int>>& adj, std::vector<int>& color, std::size_t v, int k) {
  if (v == adj.size()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int w : adj[v])
      if (std::size_t(w) < v && color[w] == c) ok = false;
    if (!ok) continue;
    color[v] = c;
    if (colorable(adj, color, v + 1, k)) return true;
  }
  return false;
}

int chromatic_oracle(const std::vector<UniversalVertex>& verts, const Rational& eps) {
  std::vector<std::vector<int>> adj(verts.size());
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = 0; b < verts.size(); ++b)
      if (a != b && epc::gq_adjacent(verts[a], verts[b], eps)) adj[a].push_back(int(b));
  std::vector<int> color(verts.size(), -1);
  for (int k = 1;; ++k)
    if (colorable(adj, color, 0, k)) return k;
}

bool independent(const epc::CanonicalSet& s, const std::vector<UniversalVertex>& verts, const Rational& eps) {
  std::vector<const UniversalVertex*> members;
  for (const auto& u : verts)
    if (s.contains(u)) members.push_back(&u);
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a; b < members.size(); ++b)
      if (epc::gq_adjacent(*members[a], *members[b], eps)) return false;
  return true;
}

}  // namespace

TEST_SUITE("universal") {

TEST_CASE("adjacency examples") {
  CHECK(epc::gq_adjacent(vec(2, "0011"), vec(2, "0101"), 0));
  CHECK_FALSE(epc::gq_adjacent(vec(2, "0011"), vec(2, "1100"), 0));
  auto a = epc::cyclic_vertex(3, {0, 0, 0});
  auto b = epc::cyclic_vertex(3, {0, 1, 2});
  CHECK(a.data == std::vector<std::uint16_t>{0, 1, 2, 0, 1, 2, 0, 1, 2});
  CHECK(pair_count(a.data, b.data) >= 6);
  CHECK(epc::gq_adjacent(a, b, Rational(1, 3)));
  CHECK_THROWS_AS(epc::gq_adjacent(vec(2, "0011"), epc::cyclic_vertex(3, {0, 0, 0}), 0), epc::Error);
  auto unbalanced = vec(2, "0001", VertexVariant::kUnrestricted);
  CHECK_THROWS_AS(epc::gq_adjacent(unbalanced, vec(2, "0011"), 0), epc::Error);
  CHECK(epc::gq_adjacent(unbalanced, vec(2, "0011"), Rational(1, 4)));
}

TEST_CASE("adjacency agrees with pair counting") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 500; ++trial) {
    const std::uint32_t q = 2 + trial % 4;
    auto u = epc::random_vertex(q, VertexVariant::kUnrestricted, rng);
    auto v = epc::random_vertex(q, VertexVariant::kUnrestricted, rng);
    const std::size_t pairs = pair_count(u.data, v.data);
    CHECK(epc::distinct_pairs(u, v) == pairs);
    for (std::uint32_t d = 0; d < 4; ++d) {
      const Rational eps(d, q * q);
      CHECK(epc::gq_adjacent(u, v, d == 0 ? Rational(1, 1000) : eps) ==
            (Rational(pairs) >= (1 - (d == 0 ? Rational(1, 1000) : eps)) * q * q));
    }
  }
}

TEST_CASE("vertex counts and enumeration") {
  CHECK(epc::enumerate_vertices(2, VertexVariant::kBalanced).size() == 6);
  CHECK(epc::enumerate_vertices(3, VertexVariant::kBalanced).size() == 1680);
  CHECK(epc::enumerate_vertices(3, VertexVariant::kCyclicShifts).size() == 27);
  CHECK(epc::enumerate_vertices(2, VertexVariant::kUnrestricted).size() == 16);
  CHECK(epc::enumerate_vertices(3, VertexVariant::kPermBlocks).size() == 216);
  CHECK(epc::vertex_count(4, VertexVariant::kBalanced) == epc::BigInt("63063000"));
  CHECK(epc::vertex_count(4, VertexVariant::kUnrestricted) == epc::BigInt("4294967296"));
  CHECK(epc::vertex_count(4, VertexVariant::kPermBlocks) == 331776);
  CHECK(epc::vertex_count(6, VertexVariant::kCyclicShifts) == 46656);

  // Brute-force filter over [q]^{q^2} for q = 2, and checked invariants for q = 3.
  std::size_t balanced2 = 0;
  for (int bits = 0; bits < 16; ++bits) balanced2 += __builtin_popcount(bits) == 2;
  CHECK(balanced2 == 6);
  for (VertexVariant variant : {VertexVariant::kBalanced, VertexVariant::kPermBlocks, VertexVariant::kCyclicShifts,
                                VertexVariant::kUnrestricted}) {
    for (std::uint32_t q = 2; q <= (variant == VertexVariant::kCyclicShifts ? 5u : variant == VertexVariant::kUnrestricted ? 2u : 3u); ++q) {
      auto verts = epc::enumerate_vertices(q, variant);
      CHECK(epc::BigInt(verts.size()) == epc::vertex_count(q, variant));
      for (std::size_t i = 1; i < verts.size(); ++i) CHECK(verts[i - 1].data < verts[i].data);
      for (const auto& u : verts) {
        if (variant != VertexVariant::kUnrestricted) CHECK(epc::is_balanced(u.data, q));
        if (variant != VertexVariant::kCyclicShifts) CHECK(u == epc::make_vertex(q, variant, u.data));
      }
      CHECK(verts.front() == epc::first_vertex(q, variant));
    }
  }
  CHECK_THROWS_AS(epc::enumerate_vertices(4, VertexVariant::kBalanced), epc::Error);
  CHECK_THROWS_AS(epc::enumerate_vertices(4, VertexVariant::kPermBlocks), epc::Error);
  CHECK_THROWS_AS(epc::enumerate_vertices(7, VertexVariant::kCyclicShifts), epc::Error);
  CHECK_THROWS_AS(epc::enumerate_vertices(3, VertexVariant::kUnrestricted), epc::Error);
  CHECK_THROWS_AS(vec(2, "0001"), epc::Error);
  CHECK_THROWS_AS(vec(2, "0011", VertexVariant::kPermBlocks), epc::Error);
}

TEST_CASE("random vertices respect their variant") {
  std::mt19937_64 a(5), b(5);
  for (VertexVariant variant : {VertexVariant::kBalanced, VertexVariant::kPermBlocks, VertexVariant::kCyclicShifts,
                                VertexVariant::kUnrestricted})
    for (int i = 0; i < 50; ++i) {
      auto u = epc::random_vertex(5, variant, a);
      CHECK(u == epc::random_vertex(5, variant, b));
      CHECK(u.data.size() == 25);
      if (variant != VertexVariant::kUnrestricted) CHECK(epc::is_balanced(u.data, 5));
    }
}

TEST_CASE("canonical cover sizes") {
  CHECK(epc::canonical_cover(3, CoverFamily::kGq).size() == 6);
  CHECK(epc::canonical_cover(3, CoverFamily::kHq).size() == 3);
  CHECK(epc::canonical_cover(4, CoverFamily::kHqCyclicEps).size() == 16);
  CHECK(epc::canonical_cover(3, CoverFamily::kHqEps).size() == 18);
  // G_{4,1/4}: choose 10 of 13 indices, then a perfect matching of them.
  const epc::BigInt expected = epc::binomial(13, 10) * epc::factorial(10) / (epc::BigInt(32) * epc::factorial(5));
  CHECK(expected == 270270);
  auto cover = epc::canonical_cover(4, CoverFamily::kGqEps);
  CHECK(cover.size() == 270270);
  std::size_t on_first_subset = 0;
  for (const auto& s : cover) {
    std::vector<int> idx;
    for (auto [a, b] : s.pairs) {
      idx.push_back(a);
      idx.push_back(b);
    }
    std::sort(idx.begin(), idx.end());
    bool first = true;
    for (int i = 0; i < 10; ++i) first = first && idx[i] == i;
    on_first_subset += first;
  }
  CHECK(on_first_subset == 945);  // 9 * 7 * 5 * 3 * 1
  for (std::uint32_t q = 2; q <= 6; ++q) {
    CHECK(epc::cover_size(q, CoverFamily::kGq) == epc::BigInt(epc::canonical_cover(q, CoverFamily::kGq).size()));
    CHECK(epc::cover_size(q, CoverFamily::kHq) == q);
    if (q >= 3) {
      CHECK(epc::cover_size(q, CoverFamily::kHqCyclicEps) == q * q);
      CHECK(epc::cover_size(q, CoverFamily::kHqEps) == epc::factorial(q) * q);
      CHECK(epc::BigInt(epc::canonical_cover(q, CoverFamily::kHqEps).size()) == epc::factorial(q) * q);
    }
  }
  CHECK_THROWS_AS(epc::canonical_cover(3, CoverFamily::kGqEps), epc::Error);
}

TEST_CASE("canonical sets are independent") {
  struct Case {
    std::uint32_t q;
    CoverFamily family;
  };
  for (Case c : {Case{2, CoverFamily::kGq}, Case{3, CoverFamily::kGq}, Case{3, CoverFamily::kHq},
                 Case{3, CoverFamily::kHqCyclicEps}, Case{4, CoverFamily::kHqCyclicEps},
                 Case{5, CoverFamily::kHqCyclicEps}, Case{3, CoverFamily::kHqEps}}) {
    auto verts = epc::enumerate_vertices(c.q, epc::family_variant(c.family));
    const Rational eps = epc::family_epsilon(c.q, c.family);
    for (const auto& s : epc::canonical_cover(c.q, c.family)) CHECK(independent(s, verts, eps));
  }
}

TEST_CASE("covers color their graphs") {
  auto g2 = epc::enumerate_vertices(2, VertexVariant::kBalanced);
  auto col2 = epc::coloring_from_cover(epc::canonical_cover(2, CoverFamily::kGq), g2);
  CHECK(col2.num_colors == 3);
  CHECK(epc::validate_coloring(epc::universal_graph(g2, 0), col2));
  CHECK(chromatic_oracle(g2, 0) == 3);

  struct Case {
    std::uint32_t q;
    CoverFamily family;
    std::size_t vertices;
    std::uint32_t colors;
  };
  for (Case c : {Case{3, CoverFamily::kHq, 216, 3}, Case{4, CoverFamily::kHqCyclicEps, 256, 16},
                 Case{3, CoverFamily::kHqCyclicEps, 27, 9}, Case{3, CoverFamily::kHqEps, 216, 18},
                 Case{3, CoverFamily::kGq, 1680, 6}}) {
    auto verts = epc::enumerate_vertices(c.q, epc::family_variant(c.family));
    CHECK(verts.size() == c.vertices);
    auto col = epc::coloring_from_cover(epc::canonical_cover(c.q, c.family), verts);
    CHECK(col.num_colors == c.colors);
    CHECK(epc::validate_coloring(epc::universal_graph(verts, epc::family_epsilon(c.q, c.family)), col));
  }
  // 0011 lies in neither A_{1,3} nor A_{1,4}.
  std::vector<UniversalVertex> outside = {vec(2, "0011")};
  CHECK_THROWS_AS(epc::coloring_from_cover(epc::canonical_cover(2, CoverFamily::kHq), outside), epc::Error);
}

TEST_CASE("adjacency matrix agrees with the predicate") {
  auto verts = epc::enumerate_vertices(3, VertexVariant::kPermBlocks);
  for (Rational eps : {Rational(0), Rational(1, 3)}) {
    epc::AdjacencyMatrix adj(verts, eps, 2);
    for (std::size_t a = 0; a < verts.size(); a += 7)
      for (std::size_t b = 0; b < verts.size(); ++b) CHECK(adj.adjacent(a, b) == epc::gq_adjacent(verts[a], verts[b], eps));
  }
  const auto& g3 = epc::g3_adjacency();
  CHECK(g3.size() == 1680);
  CHECK(g3.degree(0) == 216);
}

TEST_CASE("cyclic shortcut matches the definition") {
  for (std::uint32_t q = 2; q <= 4; ++q) {
    auto verts = epc::enumerate_vertices(q, VertexVariant::kCyclicShifts);
    for (const auto& u : verts)
      for (const auto& v : verts) {
        std::set<int> diffs;
        for (std::uint32_t i = 0; i < q; ++i) diffs.insert((u.shifts[i] + q - v.shifts[i]) % q);
        CHECK(epc::cyclic_adjacent_by_difference(u, v) == (diffs.size() >= q - 1));
        CHECK(epc::cyclic_adjacent_by_difference(u, v) == epc::gq_adjacent(u, v, Rational(1, q)));
      }
  }
}

TEST_CASE("cliques from MDS codes") {
  auto tri = epc::clique_from_mds(epc::rs_code(gf(2), 3, 2));
  REQUIRE(tri.size() == 3);
  std::set<std::vector<std::uint16_t>> images;
  for (const auto& u : tri) images.insert(u.data);
  CHECK(images == std::set<std::vector<std::uint16_t>>{{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto clique = epc::clique_from_mds(epc::rs_code(gf(q), q + 1, 2));
    CHECK(clique.size() == q + 1);
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b) CHECK(epc::gq_adjacent(clique[a], clique[b], 0));
  }
  auto single = epc::clique_from_mds(epc::Code::from_columns(3, 2, {{0, 0, 0, 1, 1, 1, 2, 2, 2}}));
  CHECK(single.size() == 1);
  auto twins = epc::Code::from_columns(2, 2, {{0, 0, 1, 1}, {0, 0, 1, 1}});
  CHECK_THROWS_AS(epc::clique_from_mds(twins), epc::Error);
  // q + 1 <= chi(G_q) <= C(q+1, 2) for q = 2, 3.
  CHECK(chromatic_oracle(epc::enumerate_vertices(2, VertexVariant::kBalanced), 0) <= 3);
}

TEST_CASE("homomorphisms from codes") {
  epc::Hypergraph k3 = epc::complete(3, 2);
  auto hom = epc::hom_from_code(epc::rs_code(gf(2), 3, 2), k3, 0);
  std::set<std::vector<std::uint16_t>> images;
  for (const auto& u : hom) images.insert(u.data);
  CHECK(images == std::set<std::vector<std::uint16_t>>{{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 1, 1, 0}});

  epc::Hypergraph c4 = epc::cycle(4);
  auto c4code = epc::Code::from_columns(2, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}});
  auto hom4 = epc::hom_from_code(c4code, c4, 0);
  for (std::size_t i = 0; i < c4.edge_count(); ++i)
    CHECK(epc::gq_adjacent(hom4[c4.edge(i)[0]], hom4[c4.edge(i)[1]], 0));

  // Two columns sharing three of the four pairs.
  auto near = epc::Code::from_columns(2, 2, {{0, 0, 1, 1}, {0, 1, 1, 1}});
  epc::Hypergraph edge(2, 2, {{0, 1}});
  auto hom_eps = epc::hom_from_code(near, edge, Rational(1, 4));
  CHECK(epc::distinct_pairs(hom_eps[0], hom_eps[1]) == 3);
  CHECK(epc::gq_adjacent(hom_eps[0], hom_eps[1], Rational(1, 4)));
  CHECK_THROWS_AS(epc::hom_from_code(near, edge, 0), epc::Error);

  // Isolated vertices map to the first enumerated vertex.
  epc::Hypergraph padded(4, 2, {{0, 1}});
  auto padded_code = epc::Code::from_columns(2, 2, {{0, 0, 1, 1}, {0, 1, 0, 1}, {1, 1, 1, 1}, {0, 1, 1, 0}});
  auto homp = epc::hom_from_code(padded_code, padded, 0);
  CHECK(homp[2] == epc::first_vertex(2, VertexVariant::kBalanced));
  CHECK(homp[3] == epc::first_vertex(2, VertexVariant::kBalanced));
}

TEST_CASE("duality round trip on random exact codes") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t q = 2 + trial % 2;
    const std::uint32_t n = 2 + trial % 7;
    std::vector<std::vector<epc::Symbol>> cols;
    for (std::uint32_t j = 0; j < n; ++j) {
      auto u = epc::random_vertex(q, trial % 3 == 0 ? VertexVariant::kUnrestricted : VertexVariant::kBalanced, rng);
      cols.emplace_back(u.data.begin(), u.data.end());
    }
    auto code = epc::Code::from_columns(q, 2, cols);
    std::vector<std::vector<epc::Vertex>> edges;
    for (epc::Vertex a = 0; a < n; ++a)
      for (epc::Vertex b = a + 1; b < n; ++b)
        if (pair_count(std::vector<std::uint16_t>(cols[a].begin(), cols[a].end()),
                       std::vector<std::uint16_t>(cols[b].begin(), cols[b].end())) == q * q)
          edges.push_back({a, b});
    epc::Hypergraph g(n, 2, edges);
    REQUIRE(epc::verify_exact(code, g).valid);
    auto hom = epc::hom_from_code(code, g, 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) CHECK(epc::gq_adjacent(hom[g.edge(i)[0]], hom[g.edge(i)[1]], 0));
    auto back = epc::code_from_hom(hom, g);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      CHECK(epc::edge_success(back, g.edge(i)) == epc::edge_success(code, g.edge(i)));
    checked += g.edge_count() > 0;
  }
  CHECK(checked > 100);
}

TEST_CASE("canonical homes") {
  auto u3 = vec(3, "012012012");
  auto home = epc::find_canonical_home(u3, CoverFamily::kGq);
  REQUIRE(home);
  CHECK(home->describe() == "pairs 1,4");
  auto h2 = epc::find_canonical_home(vec(2, "0011"), CoverFamily::kGq);
  REQUIRE(h2);
  CHECK(h2->describe() == "pairs 1,2");

  for (std::uint32_t q : {2u, 3u}) {
    auto cover = epc::canonical_cover(q, CoverFamily::kGq);
    for (const auto& u : epc::enumerate_vertices(q, VertexVariant::kBalanced)) {
      auto h = epc::find_canonical_home(u, CoverFamily::kGq);
      REQUIRE(h);
      CHECK(h->contains(u));
      CHECK(std::find(cover.begin(), cover.end(), *h) != cover.end());
    }
  }

  auto cover4 = epc::canonical_cover(4, CoverFamily::kGqEps);
  std::sort(cover4.begin(), cover4.end(), [](const auto& a, const auto& b) { return a.pairs < b.pairs; });
  std::mt19937_64 rng(0);
  int found = 0;
  for (int i = 0; i < 10000; ++i) {
    auto u = epc::random_vertex(4, VertexVariant::kUnrestricted, rng);
    auto h = epc::find_canonical_home(u, CoverFamily::kGqEps);
    if (!h || !h->contains(u)) continue;
    REQUIRE(h->pairs.size() == 5);
    const bool listed = std::binary_search(cover4.begin(), cover4.end(), *h,
                                           [](const auto& a, const auto& b) { return a.pairs < b.pairs; });
    found += listed;
  }
  CHECK(found == 10000);
  // For q = 3 a window can be free of repeats.
  auto spread = vec(3, "012012012", VertexVariant::kUnrestricted);
  CHECK_FALSE(epc::find_canonical_home(spread, CoverFamily::kGqEps));
  CHECK_THROWS_AS(epc::find_canonical_home(u3, CoverFamily::kHq), epc::Error);
}

TEST_CASE("balanced collision probability") {
  CHECK(epc::balanced_collision_probability(2, 2) == Rational(1, 3));
  CHECK(epc::balanced_collision_probability(1, 5) == 0);
  CHECK(epc::balanced_collision_probability(3, 3) == Rational(1, 4));
  for (std::uint32_t n : {2u, 3u}) {
    auto verts = epc::enumerate_vertices(n, VertexVariant::kBalanced);
    std::size_t equal = 0;
    for (const auto& u : verts) equal += u.data[0] == u.data[1];
    CHECK(Rational(equal, verts.size()) == epc::balanced_collision_probability(n, n));
  }
  CHECK_THROWS_AS(epc::balanced_collision_probability(1, 1), epc::Error);
  CHECK_THROWS_AS(epc::balanced_collision_probability(0, 3), epc::Error);
}

}  // TEST_SUITE
