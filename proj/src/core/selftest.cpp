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

#include "selftest.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "codes.hpp"
#include "construct.hpp"
#include "error.hpp"
#include "galois.hpp"
#include "hypergraph.hpp"
#include "search.hpp"
#include "universal.hpp"

namespace epc {

namespace {

// Collects key=value facts; the first failed check becomes the detail.
class Checker {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  void note(const std::string& key, const std::string& value) {
    if (!facts_.empty()) facts_ += ' ';
    facts_ += key + '=' + value;
  }
  bool passed() const { return failure_.empty(); }
  std::string detail() const { return passed() ? facts_ : "FAILED: " + failure_; }

 private:
  std::string facts_;
  std::string failure_;
};

std::shared_ptr<const GaloisField> gf(std::uint32_t q) { return std::make_shared<GaloisField>(q); }

void fano_instance(Checker& ck, const SelftestOptions& opts) {
  Hypergraph g = fano_complement();
  ck.check(g.edge_count() == 28, "fano_complement edge count");
  const Fixture* fx = find_fixture("fano");
  ck.check(fx != nullptr, "fano fixture missing");
  if (fx) ck.check(verify_exact(fx->code, g, {opts.jobs}).valid, "fano code fails verify_exact");
  auto chi = strong_chromatic(g, ChromaticMode::kExact);
  ck.check(chi.status == SolveStatus::kExact && chi.coloring.num_colors == 7, "strong chromatic number != 7");
  ck.note("edges", std::to_string(g.edge_count()));
  ck.note("chi", std::to_string(chi.coloring.num_colors));
}

void epsilon_fixtures(Checker& ck, const SelftestOptions& opts) {
  const std::vector<std::pair<std::string, std::size_t>> expected = {
      {"eps-q3-n20", 190}, {"eps-q4-n7", 21}, {"eps-q6-n6", 15}};
  for (const auto& [name, edges] : expected) {
    const Fixture* fx = find_fixture(name);
    ck.check(fx != nullptr, name + " missing");
    if (!fx) continue;
    Hypergraph g = load_hypergraph(fx->hypergraph);
    ck.check(g.edge_count() == edges, name + " edge count");
    auto cert = verify_eps(fx->code, g, fx->epsilon, {opts.jobs});
    ck.check(cert.valid, name + " fails verify_eps");
    ck.note(name, format_rational(cert.min_success));
  }
}

void mds_baselines(Checker& ck, const SelftestOptions& opts) {
  Code big = rs_code(gf(19), 20, 2);
  Hypergraph k20 = complete(20, 2);
  ck.check(big.message_count() == 361 && k20.edge_count() == 190, "GF(19) instance size");
  ck.check(verify_exact(big, k20, {opts.jobs}).valid, "rs_code(GF(19),20,2) fails");
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    Code c = rs_code(gf(q), q + 1, 2);
    ck.check(verify_exact(c, complete(q + 1, 2), {opts.jobs}).valid,
             "rs_code(GF(" + std::to_string(q) + ")) fails");
  }
  ck.note("n(q,2)", "q+1 for q in 2,3,4,5,7,8,9,19");
}

void universal_small_q(Checker& ck, const SelftestOptions& opts) {
  auto v2 = enumerate_vertices(2, VertexVariant::kBalanced);
  auto chi2 = strong_chromatic(universal_graph(v2, 0), ChromaticMode::kExact);
  ck.check(v2.size() == 6, "G_2 vertex count");
  ck.check(chi2.status == SolveStatus::kExact && chi2.coloring.num_colors == 3, "chi(G_2) != 3");

  const auto& v3 = g3_vertices();
  ck.check(v3.size() == 1680, "G_3 vertex count");
  Hypergraph g3 = universal_graph(v3, 0, opts.jobs);
  auto cover = canonical_cover(3, CoverFamily::kGq);
  Coloring col = coloring_from_cover(cover, v3);
  ck.check(col.num_colors == 6 && validate_coloring(g3, col), "G_3 cover coloring invalid");
  auto clique = clique_from_mds(rs_code(gf(3), 4, 2));
  bool pairwise = clique.size() == 4;
  for (std::size_t a = 0; a < clique.size(); ++a)
    for (std::size_t b = a + 1; b < clique.size(); ++b) pairwise = pairwise && gq_adjacent(clique[a], clique[b], 0);
  ck.check(pairwise, "G_3 clique from MDS");
  ck.note("chi(G2)", "3");
  ck.note("G3_edges", std::to_string(g3.edge_count()));
  ck.note("chi(G3)", "[4,6]");
}

bool cover_colors(std::uint32_t q, CoverFamily family, std::size_t vertices, std::uint32_t colors,
                  unsigned jobs) {
  auto verts = enumerate_vertices(q, family_variant(family));
  auto cover = canonical_cover(q, family);
  Coloring col = coloring_from_cover(cover, verts);
  Hypergraph g = universal_graph(verts, family_epsilon(q, family), jobs);
  return verts.size() == vertices && cover.size() == colors && validate_coloring(g, col);
}

void cover_colorings(Checker& ck, const SelftestOptions& opts) {
  ck.check(cover_colors(3, CoverFamily::kHq, 216, 3, opts.jobs), "H_3 3-coloring");
  ck.check(cover_colors(4, CoverFamily::kHqCyclicEps, 256, 16, opts.jobs), "H^cyc_{4,1/4} 16-coloring");
  ck.check(cover_colors(5, CoverFamily::kHqCyclicEps, 3125, 25, opts.jobs), "H^cyc_{5,1/5} 25-coloring");
  ck.check(cover_colors(3, CoverFamily::kHqEps, 216, 18, opts.jobs), "H_{3,1/3} 18-set cover");
  ck.note("covers", "H3:3 Hcyc4:16 Hcyc5:25 H3eps:18");
}

void average_error(Checker& ck, const SelftestOptions& opts) {
  {
    auto cert = verify_avg(average_error_code(2, 6), complete(6, 2), Rational(1, 5), {opts.jobs});
    ck.check(cert.valid && cert.average_success == Rational(9, 10), "p=2 n=6 average != 9/10");
  }
  std::size_t instances = 0;
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t n = 2; n <= 20; ++n) {
      const Rational target = 1 - Rational(1, p + 1);
      auto cert = verify_avg(average_error_code(p, n), complete(n, 2), 1 - target, {opts.jobs});
      const Rational avg = *cert.average_success;
      ck.check(avg >= target, "p=" + std::to_string(p) + " n=" + std::to_string(n) + " below 1-1/(p+1)");
      ck.check(avg >= average_error_lower_bound(p, n),
               "p=" + std::to_string(p) + " n=" + std::to_string(n) + " below closed form");
      ++instances;
    }
  ck.note("p2n6", "9/10");
  ck.note("instances", std::to_string(instances));
}

// Random k=2 code over [q] with n columns, half drawn balanced, together with
// the graph of all pairs it decodes exactly.
std::pair<Code, Hypergraph> random_valid_pair_code(std::mt19937_64& rng) {
  const std::uint32_t q = 2 + static_cast<std::uint32_t>(rng() % 2);
  const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng() % 7);
  std::vector<std::vector<Symbol>> columns;
  for (std::uint32_t j = 0; j < n; ++j) {
    auto variant = rng() % 4 == 0 ? VertexVariant::kUnrestricted : VertexVariant::kBalanced;
    auto u = random_vertex(q, variant, rng);
    columns.emplace_back(u.data.begin(), u.data.end());
  }
  Code c = Code::from_columns(q, 2, columns);
  std::vector<std::vector<Vertex>> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const Vertex e[2] = {a, b};
      if (edge_success(c, e) == 1) edges.push_back({a, b});
    }
  return {c, Hypergraph(n, 2, edges)};
}

void oracle_agreement(Checker& ck, const SelftestOptions& opts) {
  const std::vector<std::pair<std::string, std::uint32_t>> expected = {
      {"complete:3:2", 2}, {"complete:4:2", 3}, {"cycle:4", 2}, {"cycle:5", 2}, {"complete:3:3", 2}};
  std::string got;
  for (const auto& [spec, q] : expected) {
    auto r = q_exact(load_hypergraph(spec), 0, 3);
    ck.check(r.status == SearchStatus::kFound && r.q == q, "q_exact(" + spec + ")");
    got += (got.empty() ? "" : ",") + spec + "->" + std::to_string(r.q);
  }
  ck.note("q_exact", got);

  std::mt19937_64 rng(opts.seed);
  std::size_t edges = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto [code, g] = random_valid_pair_code(rng);
    edges += g.edge_count();
    auto hom = hom_from_code(code, g, 0);
    bool adjacent = true;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      auto e = g.edge(i);
      adjacent = adjacent && gq_adjacent(hom[e[0]], hom[e[1]], 0);
    }
    ck.check(adjacent, "hom_from_code is not a homomorphism (trial " + std::to_string(trial) + ")");
    Code back = code_from_hom(hom, g);
    bool same = true;
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      same = same && edge_success(code, g.edge(i)) == edge_success(back, g.edge(i));
    ck.check(same, "edge_success profile changed (trial " + std::to_string(trial) + ")");
    if (g.edge_count() > 0) {
      auto found = hom_search(g, code.alphabet_size(), 0);
      ck.check(found.status == SearchStatus::kFound, "hom_search misses a known code");
      if (found.status == SearchStatus::kFound)
        ck.check(verify_exact(code_from_hom(found.map, g), g).valid, "searched hom gives invalid code");
    }
  }
  ck.note("duality_trials", "100");
  ck.note("edges", std::to_string(edges));
}

void field_axioms(Checker& ck) {
  std::size_t fields = 0;
  for (std::uint32_t q = 2; q <= 64; ++q) {
    if (!is_prime_power(q)) continue;
    ++fields;
    GaloisField f(q);
    bool ok = true;
    for (std::uint32_t a = 0; a < q && ok; ++a) {
      ok = ok && f.add(a, 0) == a && f.mul(a, 1) == a && f.add(a, f.neg(a)) == 0;
      if (a != 0) ok = ok && f.mul(a, f.inv(a)) == 1;
      for (std::uint32_t b = 0; b < q && ok; ++b) {
        ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
        ok = ok && f.add(a, b) < q && f.mul(a, b) < q;
        for (std::uint32_t c = 0; c < q && ok; ++c) {
          ok = ok && f.add(f.add(a, b), c) == f.add(a, f.add(b, c));
          ok = ok && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c));
          ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
        }
      }
    }
    ck.check(ok, "field axioms fail for q=" + std::to_string(q));
  }
  ck.note("fields", std::to_string(fields));
}

bool independent(const CanonicalSet& s, std::span<const UniversalVertex> verts, const Rational& eps) {
  std::vector<const UniversalVertex*> members;
  for (const auto& u : verts)
    if (s.contains(u)) members.push_back(&u);
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a; b < members.size(); ++b)
      if (gq_adjacent(*members[a], *members[b], eps)) return false;
  return true;
}

void canonical_independence(Checker& ck) {
  const std::vector<std::pair<std::uint32_t, CoverFamily>> cases = {
      {2, CoverFamily::kGq},          {3, CoverFamily::kGq},          {3, CoverFamily::kHq},
      {3, CoverFamily::kHqCyclicEps}, {4, CoverFamily::kHqCyclicEps}, {5, CoverFamily::kHqCyclicEps},
      {3, CoverFamily::kHqEps}};
  std::size_t sets = 0;
  for (const auto& [q, family] : cases) {
    auto verts = enumerate_vertices(q, family_variant(family));
    const Rational eps = family_epsilon(q, family);
    for (const auto& s : canonical_cover(q, family)) {
      ++sets;
      ck.check(independent(s, verts, eps), "canonical set " + s.describe() + " not independent (q=" +
                                               std::to_string(q) + ")");
    }
  }
  ck.note("canonical_sets", std::to_string(sets));
}

void cyclic_shortcut(Checker& ck) {
  std::size_t pairs = 0;
  for (std::uint32_t q = 2; q <= 4; ++q) {
    auto verts = enumerate_vertices(q, VertexVariant::kCyclicShifts);
    for (const auto& u : verts)
      for (const auto& v : verts) {
        ++pairs;
        ck.check(cyclic_adjacent_by_difference(u, v) == gq_adjacent(u, v, Rational(1, q)),
                 "cyclic shortcut disagrees at q=" + std::to_string(q));
      }
  }
  ck.note("cyclic_pairs", std::to_string(pairs));
}

void collision_formula(Checker& ck) {
  for (std::uint32_t n : {2u, 3u}) {
    // Balanced vectors in [n]^{n^2} are the (n, k=n) case.
    auto verts = enumerate_vertices(n, VertexVariant::kBalanced);
    std::size_t equal = 0;
    for (const auto& u : verts) equal += u.data[0] == u.data[1];
    ck.check(Rational(equal, verts.size()) == balanced_collision_probability(n, n),
             "collision probability at n=k=" + std::to_string(n));
  }
  ck.note("collision", "(2,2)=1/3 (3,3)=1/4");
}

void normalized_columns(Checker& ck) {
  std::size_t codes = 0;
  auto check_code = [&](const Code& c, const Hypergraph& g, const std::string& name) {
    ++codes;
    ck.check(verify_exact(c, g).valid, name + " not valid");
    Coloring col = normalized_column_coloring(c);
    ck.check(validate_coloring(g, col), name + " normalized-column coloring invalid");
    if (g.uniformity() == 2) ck.check(col.num_colors <= c.alphabet_size() + 1, name + " too many colors");
  };
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u})
    check_code(rs_code(gf(q), q + 1, 2), complete(q + 1, 2), "rs(" + std::to_string(q) + ")");
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = gf(q);
    check_code(pg_linear_code(f, 2), pg_hypergraph(*f, 2), "pg(" + std::to_string(q) + ",2)");
    check_code(pg_linear_code(f, 3), pg_hypergraph(*f, 3), "pg(" + std::to_string(q) + ",3)");
  }
  check_code(find_fixture("fano")->code, fano_complement(), "fano");
  {
    Hypergraph c7 = cycle(7);
    auto chi = strong_chromatic(c7, ChromaticMode::kExact);
    check_code(compose(c7, chi.coloring, rs_code(gf(3), 3, 2)), c7, "compose(C7)");
  }
  ck.note("linear_codes", std::to_string(codes));
}

void file_round_trip(Checker& ck) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() /
                 ("epcodes-selftest-" + std::to_string(std::random_device{}()));
  fs::create_directories(dir);
  std::size_t files = 0;
  try {
    auto write = [&](const std::string& name, const std::string& text) {
      fs::path p = dir / name;
      std::ofstream(p) << text;
      ++files;
      return p.string();
    };
    for (const auto& fx : fixtures()) {
      Code back = load_code(write(fx.name + ".code", format_code(fx.code)));
      ck.check(back == fx.code, "code round trip: " + fx.name);
    }
    for (const char* spec : {"fano-complement", "complete:6:3", "cycle:5", "pg:3:3"}) {
      Hypergraph g = load_hypergraph(spec);
      Hypergraph back = load_hypergraph(write("graph.txt", format_hypergraph(g)));
      ck.check(back == g, std::string("hypergraph round trip: ") + spec);
    }
  } catch (...) {
    fs::remove_all(dir);
    throw;
  }
  fs::remove_all(dir);
  ck.note("round_trip_files", std::to_string(files));
}

void property_suites(Checker& ck, const SelftestOptions&) {
  field_axioms(ck);
  canonical_independence(ck);
  cyclic_shortcut(ck);
  collision_formula(ck);
  normalized_columns(ck);
  file_round_trip(ck);
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  std::function<void(Checker&, const SelftestOptions&)> run;
};

}  // namespace

std::vector<CriterionResult> run_acceptance(const SelftestOptions& opts) {
  const std::vector<Criterion> criteria = {
      {1, "fano-instance", 1, fano_instance},
      {2, "epsilon-fixtures", 3, epsilon_fixtures},
      {3, "mds-baselines", 2, mds_baselines},
      {4, "universal-small-q", 30, universal_small_q},
      {5, "cover-colorings", 30, cover_colorings},
      {6, "average-error", 5, average_error},
      {7, "oracle-agreement", 60, oracle_agreement},
      {8, "property-suites", 60, property_suites},
  };
  std::vector<CriterionResult> out;
  for (const auto& c : criteria) {
    CriterionResult r{c.id, c.name, false, 0, c.limit, ""};
    Checker ck;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(ck, opts);
      r.detail = ck.detail();
      r.passed = ck.passed();
    } catch (const std::exception& e) {
      r.detail = std::string("FAILED: exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.passed && r.seconds >= r.limit_seconds) {
      r.passed = false;
      r.detail = "FAILED: time limit exceeded; " + r.detail;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_results(const std::vector<CriterionResult>& results, bool timings) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs/%.0fs", r.seconds, r.limit_seconds);
    os << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << ' ';
    if (timings) os << timing << ' ';
    os << r.detail << '\n';
    passed += r.passed;
  }
  os << "summary " << passed << '/' << results.size() << " passed\n";
  return os.str();
}

}  // namespace epc
