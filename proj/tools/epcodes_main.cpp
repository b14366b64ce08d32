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

// epcodes: command-line front end over the C API.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "epcodes/epcodes.h"

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

struct UsageError {
  std::string message;
};

struct HypergraphDeleter {
  void operator()(epc_hypergraph* g) const { epc_hypergraph_free(g); }
};
struct CodeDeleter {
  void operator()(epc_code* c) const { epc_code_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { epc_string_free(s); }
};
using HypergraphPtr = std::unique_ptr<epc_hypergraph, HypergraphDeleter>;
using CodePtr = std::unique_ptr<epc_code, CodeDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

void check(epc_status s, const std::string& context = "") {
  if (s != EPC_OK) throw UsageError{(context.empty() ? "" : context + ": ") + epc_last_error()};
}

HypergraphPtr load_hypergraph(const std::string& spec, const std::string& flag) {
  epc_hypergraph* g = nullptr;
  check(epc_hypergraph_load(spec.c_str(), &g), flag + " " + spec);
  return HypergraphPtr(g);
}

CodePtr load_code(const std::string& spec, const std::string& flag) {
  epc_code* c = nullptr;
  check(epc_code_load(spec.c_str(), &c), flag + " " + spec);
  return CodePtr(c);
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

void write_file(const std::string& path, const std::string& text, const std::string& flag) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{flag + ": cannot open '" + path + "' for writing"};
  out << text;
  if (!out) throw UsageError{flag + ": write to '" + path + "' failed"};
}

std::string comment_lines(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    out += "# " + text.substr(start, end - start) + '\n';
    start = end + 1;
  }
  return out;
}

std::string code_text(const epc_code* c) {
  char* s = nullptr;
  check(epc_code_format(c, &s));
  return take(s);
}

struct Globals {
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

// hypergraph
struct HypergraphArgs {
  std::string spec;
  std::string action = "info";
  std::string mode = "exact";
  std::uint64_t budget = 0;
  std::string out;
};

int run_hypergraph(const HypergraphArgs& a) {
  auto g = load_hypergraph(a.spec, "--hypergraph");
  if (a.action == "info") {
    std::uint32_t n = 0, k = 0;
    std::uint64_t m = 0;
    check(epc_hypergraph_info(g.get(), &n, &k, &m));
    std::cout << "vertices " << n << "\nuniformity " << k << "\nedges " << m << '\n';
    return kExitValid;
  }
  if (a.action == "color") {
    char* report = nullptr;
    check(epc_hypergraph_color(g.get(), a.mode == "exact", a.budget, &report));
    std::cout << take(report);
    return kExitValid;
  }
  HypergraphPtr target;
  if (a.action == "two-section") {
    epc_hypergraph* t = nullptr;
    check(epc_hypergraph_two_section(g.get(), &t));
    target.reset(t);
  }
  char* text = nullptr;
  check(epc_hypergraph_format(target ? target.get() : g.get(), &text));
  const std::string body = take(text);
  if (a.out.empty()) std::cout << body;
  else write_file(a.out, body, "--out");
  return kExitValid;
}

// construct
struct ConstructArgs {
  std::string spec;
  std::string base;
  std::string mode = "exact";
  std::uint64_t budget = 0;
  std::uint32_t field = 0;
  std::uint32_t k = 0;
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  bool verify = false;
  std::string out;
};

int emit_code(const epc_code* c, const std::string& report, const epc_hypergraph* g, epc_verify_mode mode,
              const std::string& eps, const ConstructArgs& a, const Globals& globals) {
  std::string text = report;
  int exit_code = kExitValid;
  if (a.verify) {
    int valid = 0;
    char* cert = nullptr;
    check(epc_verify(c, g, mode, eps.c_str(), globals.jobs, &valid, &cert));
    text += take(cert);
    exit_code = valid ? kExitValid : kExitInvalid;
  }
  if (a.out.empty()) {
    // Reports become comments so stdout stays a readable code file.
    std::cout << comment_lines(text) << code_text(c);
  } else {
    write_file(a.out, code_text(c), "--out");
    std::cout << text;
  }
  return exit_code;
}

int run_compose(const ConstructArgs& a, const Globals& globals) {
  auto g = load_hypergraph(a.spec, "--hypergraph");
  CodePtr base;
  if (!a.base.empty()) base = load_code(a.base, "--base");
  epc_code* out = nullptr;
  char* report = nullptr;
  check(epc_code_compose(g.get(), base.get(), a.mode == "exact", a.budget, &out, &report));
  CodePtr code(out);
  return emit_code(code.get(), take(report), g.get(), EPC_VERIFY_EXACT, "0", a, globals);
}

int run_pg(const ConstructArgs& a, const Globals& globals) {
  epc_code* out = nullptr;
  check(epc_code_pg(a.field, a.k, &out), "--field");
  CodePtr code(out);
  auto g = load_hypergraph("pg:" + std::to_string(a.field) + ":" + std::to_string(a.k), "pg");
  return emit_code(code.get(), "", g.get(), EPC_VERIFY_EXACT, "0", a, globals);
}

int run_avg(const ConstructArgs& a, const Globals& globals) {
  epc_code* out = nullptr;
  check(epc_code_average_error(a.p, a.n, &out), "--p");
  CodePtr code(out);
  auto g = load_hypergraph("complete:" + std::to_string(a.n) + ":2", "avg");
  const std::string eps = "1/" + std::to_string(a.p + 1);
  return emit_code(code.get(), "", g.get(), EPC_VERIFY_AVG, eps, a, globals);
}

// verify
struct VerifyArgs {
  std::string code;
  std::string spec;
  std::string eps;
  std::string avg_eps;
};

int run_verify(const VerifyArgs& a, const Globals& globals) {
  auto code = load_code(a.code, "--code");
  auto g = load_hypergraph(a.spec, "--hypergraph");
  epc_verify_mode mode = EPC_VERIFY_EXACT;
  std::string eps = "0";
  if (!a.eps.empty()) {
    mode = EPC_VERIFY_EPS;
    eps = a.eps;
  } else if (!a.avg_eps.empty()) {
    mode = EPC_VERIFY_AVG;
    eps = a.avg_eps;
  }
  int valid = 0;
  char* cert = nullptr;
  check(epc_verify(code.get(), g.get(), mode, eps.c_str(), globals.jobs, &valid, &cert),
        mode == EPC_VERIFY_EXACT ? "verify" : (mode == EPC_VERIFY_EPS ? "--eps" : "--avg-eps"));
  std::cout << take(cert);
  return valid ? kExitValid : kExitInvalid;
}

// universal
struct UniversalArgs {
  std::uint32_t q = 0;
  std::string family = "Gq";
  std::string action;
  std::optional<std::uint64_t> seed;
};

int run_universal(const UniversalArgs& a, const Globals& globals) {
  char* report = nullptr;
  check(epc_universal_run(a.q, a.family.c_str(), a.action.c_str(), a.seed.value_or(globals.seed), globals.jobs,
                          &report),
        "universal");
  std::cout << take(report);
  return kExitValid;
}

// search
struct SearchArgs {
  std::string spec;
  std::string eps = "0";
  std::uint32_t qmax = 0;
  std::uint64_t budget = 0;
  std::string out;
};

int run_search(const SearchArgs& a) {
  auto g = load_hypergraph(a.spec, "--hypergraph");
  int found = 0;
  char* report = nullptr;
  epc_code* witness = nullptr;
  const auto start = std::chrono::steady_clock::now();
  check(epc_search(g.get(), a.eps.c_str(), a.qmax, a.budget, &found, &report, &witness), "search");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CodePtr code(witness);
  std::cout << take(report);
  if (code) {
    if (a.out.empty()) std::cout << "witness\n" << code_text(code.get());
    else write_file(a.out, code_text(code.get()), "--out");
  }
  // Timing goes to stderr so stdout is reproducible.
  std::fprintf(stderr, "time_seconds %.3f\n", seconds);
  return found ? kExitValid : kExitInvalid;
}

int run_fixtures(const std::string& action, const std::string& name) {
  char* report = nullptr;
  if (action == "list") check(epc_fixtures_list(&report));
  else check(epc_fixture_show(name.c_str(), &report), "fixtures show");
  std::cout << take(report);
  return kExitValid;
}

int run_selftest(bool timings, const Globals& globals) {
  int passed = 0;
  char* report = nullptr;
  check(epc_selftest(globals.seed, globals.jobs, timings ? 1 : 0, &passed, &report));
  std::cout << take(report);
  return passed ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erasure codes with restricted decoding sets"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(epc_version()));
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for randomized procedures")->default_val(0);
  app.add_option("--jobs", globals.jobs, "Worker threads")->default_val(1)->check(CLI::Range(1u, 256u));

  const std::vector<std::string> modes = {"exact", "greedy"};

  HypergraphArgs hyp;
  auto* hyp_cmd = app.add_subcommand("hypergraph", "Inspect, color or rewrite a hypergraph");
  hyp_cmd->add_option("--hypergraph", hyp.spec, "File or shorthand")->required();
  hyp_cmd->add_option("--action", hyp.action, "info, color, two-section or write")
      ->check(CLI::IsMember({"info", "color", "two-section", "write"}));
  hyp_cmd->add_option("--mode", hyp.mode, "Coloring mode")->check(CLI::IsMember(modes));
  hyp_cmd->add_option("--budget", hyp.budget, "Exact coloring node budget (0 = default)");
  hyp_cmd->add_option("--out", hyp.out, "Output file for two-section/write");

  ConstructArgs con;
  auto* con_cmd = app.add_subcommand("construct", "Build a code");
  con_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--verify", con.verify, "Run the matching verifier");
    cmd->add_option("--out", con.out, "Write the code file here");
  };
  auto* compose_cmd = con_cmd->add_subcommand("compose", "Coloring composed with an MDS base code");
  compose_cmd->add_option("--hypergraph", con.spec, "File or shorthand")->required();
  compose_cmd->add_option("--base", con.base, "Base code (default: smallest fitting Reed-Solomon code)");
  compose_cmd->add_option("--mode", con.mode, "Coloring mode")->check(CLI::IsMember(modes));
  compose_cmd->add_option("--budget", con.budget, "Exact coloring node budget (0 = default)");
  add_common(compose_cmd);
  auto* pg_cmd = con_cmd->add_subcommand("pg", "Projective linear code");
  pg_cmd->add_option("--field", con.field, "Field order q")->required();
  pg_cmd->add_option("--k", con.k, "Dimension")->required();
  add_common(pg_cmd);
  auto* avg_cmd = con_cmd->add_subcommand("avg", "Average-error code for the complete graph");
  avg_cmd->add_option("--p", con.p, "Prime-power alphabet")->required();
  avg_cmd->add_option("--n", con.n, "Number of vertices")->required();
  add_common(avg_cmd);

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand("verify", "Verify a code against a hypergraph");
  ver_cmd->add_option("--code", ver.code, "Code file or fixture name")->required();
  ver_cmd->add_option("--hypergraph", ver.spec, "File or shorthand")->required();
  auto* eps_opt = ver_cmd->add_option("--eps", ver.eps, "Per-edge error bound");
  auto* avg_opt = ver_cmd->add_option("--avg-eps", ver.avg_eps, "Average error bound");
  eps_opt->excludes(avg_opt);

  UniversalArgs uni;
  auto* uni_cmd = app.add_subcommand("universal", "Universal graphs and their covers");
  uni_cmd->add_option("--q", uni.q, "Alphabet size")->required();
  uni_cmd->add_option("--family", uni.family, "Gq, Hq, Hq_cyclic_eps, Hq_eps or Gq_eps")
      ->check(CLI::IsMember({"Gq", "Hq", "Hq_cyclic_eps", "Hq_eps", "Gq_eps"}));
  uni_cmd->add_option("--action", uni.action, "enum, cover, color, clique or stats")
      ->required()
      ->check(CLI::IsMember({"enum", "cover", "color", "clique", "stats"}));
  uni_cmd->add_option("--seed", uni.seed, "Seed (overrides the global one)");

  SearchArgs sea;
  auto* sea_cmd = app.add_subcommand("search", "Exhaustive smallest-alphabet search");
  sea_cmd->add_option("--hypergraph", sea.spec, "File or shorthand")->required();
  sea_cmd->add_option("--eps", sea.eps, "Per-edge error bound");
  sea_cmd->add_option("--qmax", sea.qmax, "Largest alphabet to try")->required()->check(CLI::Range(2u, 65536u));
  sea_cmd->add_option("--budget", sea.budget, "Search node budget per alphabet (0 = default)");
  sea_cmd->add_option("--out", sea.out, "Write the witness code here");

  std::string fixture_name;
  auto* fix_cmd = app.add_subcommand("fixtures", "Embedded codes");
  fix_cmd->require_subcommand(1);
  auto* fix_list = fix_cmd->add_subcommand("list", "List fixtures");
  auto* fix_show = fix_cmd->add_subcommand("show", "Print a fixture as a code file");
  fix_show->add_option("name", fixture_name, "Fixture name")->required();

  bool timings = false;
  auto* self_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  self_cmd->add_flag("--timings", timings, "Include runtimes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*hyp_cmd) return run_hypergraph(hyp);
    if (*compose_cmd) return run_compose(con, globals);
    if (*pg_cmd) return run_pg(con, globals);
    if (*avg_cmd) return run_avg(con, globals);
    if (*ver_cmd) return run_verify(ver, globals);
    if (*uni_cmd) return run_universal(uni, globals);
    if (*sea_cmd) return run_search(sea);
    if (*fix_list) return run_fixtures("list", "");
    if (*fix_show) return run_fixtures("show", fixture_name);
    if (*self_cmd) return run_selftest(timings, globals);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitError;
  }
  return kExitError;
}
