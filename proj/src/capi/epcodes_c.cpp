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

#include "epcodes/epcodes.h"

#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>

#include "codes.hpp"
#include "construct.hpp"
#include "error.hpp"
#include "galois.hpp"
#include "hypergraph.hpp"
#include "search.hpp"
#include "selftest.hpp"
#include "universal.hpp"

struct epc_hypergraph {
  epc::Hypergraph value;
};

struct epc_code {
  epc::Code value;
};

namespace {

thread_local std::string last_error;

epc_status status_of(epc::ErrorKind kind) {
  switch (kind) {
    case epc::ErrorKind::kArgument: return EPC_ERR_ARGUMENT;
    case epc::ErrorKind::kParse: return EPC_ERR_PARSE;
    case epc::ErrorKind::kCapExceeded: return EPC_ERR_CAP_EXCEEDED;
    case epc::ErrorKind::kInvalid: return EPC_ERR_INVALID;
  }
  return EPC_ERR_INTERNAL;
}

template <typename Fn>
epc_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return EPC_OK;
  } catch (const epc::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return EPC_ERR_CAP_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return EPC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) epc::fail(epc::ErrorKind::kArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

epc::Rational rational_arg(const char* text) {
  return text == nullptr ? epc::Rational(0) : epc::parse_rational(text);
}

std::string join_colors(const epc::Coloring& c) {
  std::string s;
  for (std::size_t v = 0; v < c.colors.size(); ++v) {
    if (v > 0) s += ' ';
    s += std::to_string(c.colors[v] + 1);
  }
  return s;
}

std::string coloring_report(const epc::Hypergraph& g, const epc::ChromaticResult& r) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << '\n'
     << "uniformity " << g.uniformity() << '\n'
     << "edges " << g.edge_count() << '\n'
     << "colors " << r.coloring.num_colors << '\n'
     << "lower_bound " << r.lower_bound << '\n'
     << "status " << (r.status == epc::SolveStatus::kExact ? "exact" : "bound-only") << '\n'
     << "nodes " << r.nodes << '\n'
     << "coloring " << join_colors(r.coloring) << '\n';
  return os.str();
}

epc::CoverFamily family_arg(const std::string& name) {
  if (name == "Gq") return epc::CoverFamily::kGq;
  if (name == "Hq") return epc::CoverFamily::kHq;
  if (name == "Hq_cyclic_eps") return epc::CoverFamily::kHqCyclicEps;
  if (name == "Hq_eps") return epc::CoverFamily::kHqEps;
  if (name == "Gq_eps") return epc::CoverFamily::kGqEps;
  epc::fail(epc::ErrorKind::kArgument,
            "unknown family '" + name + "' (expected Gq, Hq, Hq_cyclic_eps, Hq_eps, Gq_eps)");
}

const char* variant_label(epc::VertexVariant v) {
  switch (v) {
    case epc::VertexVariant::kBalanced: return "balanced";
    case epc::VertexVariant::kUnrestricted: return "unrestricted";
    case epc::VertexVariant::kPermBlocks: return "perm-blocks";
    case epc::VertexVariant::kCyclicShifts: return "cyclic-shifts";
  }
  return "?";
}

constexpr int kHomeSamples = 10000;

std::string universal_report(std::uint32_t q, const std::string& family_name, const std::string& action,
                             std::uint64_t seed, unsigned jobs) {
  const epc::CoverFamily family = family_arg(family_name);
  const epc::VertexVariant variant = epc::family_variant(family);
  const epc::Rational eps = epc::family_epsilon(q, family);
  std::ostringstream os;
  if (action == "enum") {
    epc::for_each_vertex(q, variant, [&](const epc::UniversalVertex& u) { os << epc::format_vertex(u) << '\n'; });
  } else if (action == "cover") {
    auto cover = epc::canonical_cover(q, family);
    os << "sets " << cover.size() << '\n';
    for (const auto& s : cover) os << s.describe() << '\n';
  } else if (action == "color") {
    auto verts = epc::enumerate_vertices(q, variant);
    auto cover = epc::canonical_cover(q, family);
    epc::Coloring col = epc::coloring_from_cover(cover, verts);
    epc::Hypergraph g = epc::universal_graph(verts, eps, jobs);
    os << "vertices " << verts.size() << '\n'
       << "edges " << g.edge_count() << '\n'
       << "colors " << col.num_colors << '\n'
       << "valid " << (epc::validate_coloring(g, col) ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < verts.size(); ++i) os << epc::format_vertex(verts[i]) << ' ' << col.colors[i] + 1 << '\n';
  } else if (action == "clique") {
    if (family != epc::CoverFamily::kGq) epc::fail(epc::ErrorKind::kArgument, "clique action needs family Gq");
    auto field = std::make_shared<epc::GaloisField>(q);
    auto clique = epc::clique_from_mds(epc::rs_code(field, q + 1, 2));
    os << "clique_size " << clique.size() << '\n';
    for (const auto& u : clique) os << epc::format_vertex(u) << '\n';
  } else if (action == "stats") {
    os << "q " << q << '\n'
       << "family " << family_name << '\n'
       << "variant " << variant_label(variant) << '\n'
       << "epsilon " << epc::format_rational(eps) << '\n'
       << "vertex_count " << epc::vertex_count(q, variant) << '\n';
    try {
      os << "cover_size " << epc::cover_size(q, family) << '\n';
    } catch (const epc::Error&) {
      os << "cover_size n/a\n";
    }
    if (family == epc::CoverFamily::kGq)
      os << "collision_probability " << epc::format_rational(epc::balanced_collision_probability(q, q)) << '\n';
    if (family == epc::CoverFamily::kGq || family == epc::CoverFamily::kGqEps) {
      std::mt19937_64 rng(seed);
      int found = 0;
      for (int i = 0; i < kHomeSamples; ++i) {
        auto u = epc::random_vertex(q, variant, rng);
        auto home = epc::find_canonical_home(u, family);
        if (home && home->contains(u)) ++found;
      }
      os << "seed " << seed << '\n' << "home_samples " << kHomeSamples << '\n' << "homes_found " << found << '\n';
    }
  } else {
    epc::fail(epc::ErrorKind::kArgument, "unknown action '" + action + "' (expected enum, cover, color, clique, stats)");
  }
  return os.str();
}

}  // namespace

extern "C" {

const char* epc_version(void) { return "1.0.0"; }

const char* epc_last_error(void) { return last_error.c_str(); }

const char* epc_status_name(epc_status status) {
  switch (status) {
    case EPC_OK: return "ok";
    case EPC_ERR_ARGUMENT: return "argument";
    case EPC_ERR_PARSE: return "parse";
    case EPC_ERR_CAP_EXCEEDED: return "cap-exceeded";
    case EPC_ERR_INVALID: return "invalid";
    case EPC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void epc_string_free(char* s) { std::free(s); }

epc_status epc_hypergraph_load(const char* spec, epc_hypergraph** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new epc_hypergraph{epc::load_hypergraph(spec)};
  });
}

epc_status epc_hypergraph_parse(const char* text, epc_hypergraph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new epc_hypergraph{epc::parse_hypergraph(text)};
  });
}

void epc_hypergraph_free(epc_hypergraph* g) { delete g; }

epc_status epc_hypergraph_info(const epc_hypergraph* g, uint32_t* n, uint32_t* k, uint64_t* edges) {
  return guarded([&] {
    need(g, "hypergraph");
    if (n) *n = g->value.vertex_count();
    if (k) *k = g->value.uniformity();
    if (edges) *edges = g->value.edge_count();
  });
}

epc_status epc_hypergraph_format(const epc_hypergraph* g, char** text) {
  return guarded([&] {
    need(g, "hypergraph");
    need(text, "text");
    *text = dup(epc::format_hypergraph(g->value));
  });
}

epc_status epc_hypergraph_two_section(const epc_hypergraph* g, epc_hypergraph** out) {
  return guarded([&] {
    need(g, "hypergraph");
    need(out, "out");
    *out = new epc_hypergraph{epc::two_section(g->value)};
  });
}

epc_status epc_hypergraph_color(const epc_hypergraph* g, int exact, uint64_t budget, char** report) {
  return guarded([&] {
    need(g, "hypergraph");
    need(report, "report");
    auto r = epc::strong_chromatic(g->value, exact ? epc::ChromaticMode::kExact : epc::ChromaticMode::kGreedy,
                                   budget == 0 ? epc::kDefaultColoringBudget : budget);
    *report = dup(coloring_report(g->value, r));
  });
}

epc_status epc_hypergraph_validate_coloring(const epc_hypergraph* g, const uint32_t* colors, size_t count,
                                            int* valid) {
  return guarded([&] {
    need(g, "hypergraph");
    need(valid, "valid");
    if (count > 0) need(colors, "colors");
    epc::Coloring c{std::vector<std::uint32_t>(colors, colors + count), 0};
    for (auto x : c.colors) c.num_colors = std::max(c.num_colors, x + 1);
    *valid = epc::validate_coloring(g->value, c) ? 1 : 0;
  });
}

epc_status epc_code_load(const char* spec, epc_code** out) {
  return guarded([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new epc_code{epc::load_code(spec)};
  });
}

epc_status epc_code_parse(const char* text, epc_code** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "out");
    *out = new epc_code{epc::parse_code(text)};
  });
}

void epc_code_free(epc_code* c) { delete c; }

epc_status epc_code_info(const epc_code* c, uint32_t* q, uint32_t* k, uint32_t* n, int* linear) {
  return guarded([&] {
    need(c, "code");
    if (q) *q = c->value.alphabet_size();
    if (k) *k = c->value.dimension();
    if (n) *n = c->value.length();
    if (linear) *linear = c->value.is_linear() ? 1 : 0;
  });
}

epc_status epc_code_format(const epc_code* c, char** text) {
  return guarded([&] {
    need(c, "code");
    need(text, "text");
    *text = dup(epc::format_code(c->value));
  });
}

epc_status epc_code_rs(uint32_t q, uint32_t n, uint32_t k, epc_code** out) {
  return guarded([&] {
    need(out, "out");
    *out = new epc_code{epc::rs_code(std::make_shared<epc::GaloisField>(q), n, k)};
  });
}

epc_status epc_code_pg(uint32_t q, uint32_t k, epc_code** out) {
  return guarded([&] {
    need(out, "out");
    *out = new epc_code{epc::pg_linear_code(std::make_shared<epc::GaloisField>(q), k)};
  });
}

epc_status epc_code_average_error(uint32_t p, uint32_t n, epc_code** out) {
  return guarded([&] {
    need(out, "out");
    *out = new epc_code{epc::average_error_code(p, n)};
  });
}

epc_status epc_code_compose(const epc_hypergraph* g, const epc_code* base, int exact, uint64_t budget,
                            epc_code** out, char** report) {
  return guarded([&] {
    need(g, "hypergraph");
    need(out, "out");
    if (budget == 0) budget = epc::kDefaultColoringBudget;
    std::ostringstream os;
    if (base == nullptr && exact) {
      auto composed = epc::compose_with_rs(g->value, budget);
      os << coloring_report(g->value, composed.coloring) << "base rs\n"
         << "field " << composed.field_order << '\n';
      *out = new epc_code{std::move(composed.code)};
    } else {
      auto chi = epc::strong_chromatic(g->value, exact ? epc::ChromaticMode::kExact : epc::ChromaticMode::kGreedy,
                                       budget);
      epc::Code base_code = [&] {
        if (base != nullptr) return base->value;
        const std::uint32_t positions = std::max(chi.coloring.num_colors, g->value.uniformity());
        const auto q = static_cast<std::uint32_t>(epc::next_prime_power(positions - 1));
        return epc::rs_code(std::make_shared<epc::GaloisField>(q), positions, g->value.uniformity());
      }();
      os << coloring_report(g->value, chi) << "base " << (base ? "given" : "rs") << '\n'
         << "field " << base_code.alphabet_size() << '\n';
      *out = new epc_code{epc::compose(g->value, chi.coloring, base_code)};
    }
    if (report) *report = dup(os.str());
  });
}

epc_status epc_fixtures_list(char** report) {
  return guarded([&] {
    need(report, "report");
    std::ostringstream os;
    for (const auto& f : epc::fixtures())
      os << f.name << ' ' << f.hypergraph << ' ' << epc::format_rational(f.epsilon) << ' ' << f.description << '\n';
    *report = dup(os.str());
  });
}

epc_status epc_fixture_show(const char* name, char** report) {
  return guarded([&] {
    need(name, "name");
    need(report, "report");
    const epc::Fixture* f = epc::find_fixture(name);
    if (f == nullptr) epc::fail(epc::ErrorKind::kArgument, std::string("unknown fixture '") + name + "'");
    std::ostringstream os;
    os << "# name " << f->name << '\n'
       << "# hypergraph " << f->hypergraph << '\n'
       << "# epsilon " << epc::format_rational(f->epsilon) << '\n'
       << "# description " << f->description << '\n'
       << epc::format_code(f->code);
    *report = dup(os.str());
  });
}

epc_status epc_verify(const epc_code* c, const epc_hypergraph* g, epc_verify_mode mode, const char* eps,
                      unsigned jobs, int* valid, char** report) {
  return guarded([&] {
    need(c, "code");
    need(g, "hypergraph");
    epc::VerifyOptions opts{jobs == 0 ? 1u : jobs};
    epc::Certificate cert;
    switch (mode) {
      case EPC_VERIFY_EXACT: cert = epc::verify_exact(c->value, g->value, opts); break;
      case EPC_VERIFY_EPS: cert = epc::verify_eps(c->value, g->value, rational_arg(eps), opts); break;
      case EPC_VERIFY_AVG: cert = epc::verify_avg(c->value, g->value, rational_arg(eps), opts); break;
      default: epc::fail(epc::ErrorKind::kArgument, "unknown verify mode");
    }
    if (valid) *valid = cert.valid ? 1 : 0;
    if (report) *report = dup(epc::format_certificate(cert));
  });
}

epc_status epc_universal_run(uint32_t q, const char* family, const char* action, uint64_t seed, unsigned jobs,
                             char** report) {
  return guarded([&] {
    need(family, "family");
    need(action, "action");
    need(report, "report");
    *report = dup(universal_report(q, family, action, seed, jobs == 0 ? 1u : jobs));
  });
}

epc_status epc_search(const epc_hypergraph* g, const char* eps, uint32_t qmax, uint64_t budget, int* found,
                      char** report, epc_code** witness) {
  return guarded([&] {
    need(g, "hypergraph");
    epc::SearchOptions opts;
    if (budget != 0) opts.budget = budget;
    const epc::Rational e = rational_arg(eps);
    auto r = epc::q_exact(g->value, e, qmax, opts);
    std::ostringstream os;
    os << "verdict " << epc::to_string(r.status) << '\n'
       << "epsilon " << epc::format_rational(e) << '\n'
       << "qmax " << qmax << '\n';
    if (r.status == epc::SearchStatus::kFound) os << "q " << r.q << '\n';
    for (const auto& [q, st] : r.tried) os << "tried " << q << ' ' << epc::to_string(st) << '\n';
    os << "nodes " << r.nodes << '\n';
    if (found) *found = r.status == epc::SearchStatus::kFound ? 1 : 0;
    if (report) *report = dup(os.str());
    if (witness) *witness = r.witness ? new epc_code{std::move(*r.witness)} : nullptr;
  });
}

epc_status epc_selftest(uint64_t seed, unsigned jobs, int timings, int* all_passed, char** report) {
  return guarded([&] {
    auto results = epc::run_acceptance({seed, jobs == 0 ? 1u : jobs});
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (all_passed) *all_passed = ok ? 1 : 0;
    if (report) *report = dup(epc::format_results(results, timings != 0));
  });
}

}  // extern "C"
