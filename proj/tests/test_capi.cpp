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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "epcodes/epcodes.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  epc_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {

TEST_CASE("hypergraph handles") {
  epc_hypergraph* g = nullptr;
  REQUIRE(epc_hypergraph_load("fano-complement", &g) == EPC_OK);
  uint32_t n = 0, k = 0;
  uint64_t m = 0;
  CHECK(epc_hypergraph_info(g, &n, &k, &m) == EPC_OK);
  CHECK(n == 7);
  CHECK(k == 3);
  CHECK(m == 28);
  char* report = nullptr;
  REQUIRE(epc_hypergraph_color(g, 1, 0, &report) == EPC_OK);
  std::string text = take(report);
  CHECK(text.find("colors 7\n") != std::string::npos);
  CHECK(text.find("status exact\n") != std::string::npos);
  uint32_t colors[7] = {0, 1, 2, 3, 4, 5, 6};
  int valid = 0;
  CHECK(epc_hypergraph_validate_coloring(g, colors, 7, &valid) == EPC_OK);
  CHECK(valid == 1);
  colors[6] = 0;
  CHECK(epc_hypergraph_validate_coloring(g, colors, 7, &valid) == EPC_OK);
  CHECK(valid == 0);
  epc_hypergraph* two = nullptr;
  REQUIRE(epc_hypergraph_two_section(g, &two) == EPC_OK);
  CHECK(epc_hypergraph_info(two, nullptr, &k, &m) == EPC_OK);
  CHECK(k == 2);
  CHECK(m == 21);
  char* formatted = nullptr;
  REQUIRE(epc_hypergraph_format(two, &formatted) == EPC_OK);
  epc_hypergraph* back = nullptr;
  CHECK(epc_hypergraph_parse(formatted, &back) == EPC_OK);
  epc_string_free(formatted);
  epc_hypergraph_free(back);
  epc_hypergraph_free(two);
  epc_hypergraph_free(g);
}

TEST_CASE("status codes and messages") {
  epc_hypergraph* g = nullptr;
  CHECK(epc_hypergraph_parse("4 2\n1 2\n1 9\n", &g) == EPC_ERR_PARSE);
  CHECK(std::string(epc_last_error()).find("line 3") != std::string::npos);
  CHECK(g == nullptr);
  CHECK(epc_hypergraph_load("complete:3:5", &g) == EPC_ERR_ARGUMENT);
  CHECK(epc_hypergraph_load(nullptr, &g) == EPC_ERR_ARGUMENT);
  CHECK(epc_code_rs(6, 4, 2, nullptr) == EPC_ERR_ARGUMENT);
  epc_code* c = nullptr;
  CHECK(epc_code_rs(6, 4, 2, &c) == EPC_ERR_ARGUMENT);
  CHECK(std::string(epc_last_error()).find("prime power") != std::string::npos);
  REQUIRE(epc_code_rs(3, 4, 2, &c) == EPC_OK);
  CHECK(std::string(epc_last_error()).empty());
  epc_code_free(c);
  CHECK(std::string(epc_status_name(EPC_ERR_CAP_EXCEEDED)) == "cap-exceeded");
  CHECK(std::string(epc_version()).size() > 0);
  epc_hypergraph_free(nullptr);
  epc_code_free(nullptr);
  epc_string_free(nullptr);
}

TEST_CASE("verification") {
  epc_code* fano = nullptr;
  epc_hypergraph* g = nullptr;
  epc_hypergraph* k73 = nullptr;
  REQUIRE(epc_code_load("fano", &fano) == EPC_OK);
  REQUIRE(epc_hypergraph_load("fano-complement", &g) == EPC_OK);
  REQUIRE(epc_hypergraph_load("complete:7:3", &k73) == EPC_OK);
  int valid = -1;
  char* report = nullptr;
  CHECK(epc_verify(fano, g, EPC_VERIFY_EXACT, nullptr, 1, &valid, &report) == EPC_OK);
  CHECK(valid == 1);
  CHECK(take(report).rfind("verdict valid\n", 0) == 0);
  CHECK(epc_verify(fano, k73, EPC_VERIFY_EXACT, nullptr, 2, &valid, &report) == EPC_OK);
  CHECK(valid == 0);
  CHECK(take(report).find("failing_edge 1 2 3\n") != std::string::npos);
  CHECK(epc_verify(fano, k73, EPC_VERIFY_EPS, "1/2", 1, &valid, &report) == EPC_OK);
  CHECK(valid == 1);
  epc_string_free(report);
  CHECK(epc_verify(fano, k73, EPC_VERIFY_EPS, "bogus", 1, &valid, nullptr) == EPC_ERR_PARSE);
  epc_hypergraph* k72 = nullptr;
  REQUIRE(epc_hypergraph_load("complete:7:2", &k72) == EPC_OK);
  CHECK(epc_verify(fano, k72, EPC_VERIFY_EXACT, nullptr, 1, &valid, nullptr) == EPC_ERR_ARGUMENT);
  epc_hypergraph_free(k72);
  epc_hypergraph_free(k73);
  epc_hypergraph_free(g);
  epc_code_free(fano);
}

TEST_CASE("constructions") {
  epc_hypergraph* c5 = nullptr;
  REQUIRE(epc_hypergraph_load("cycle:5", &c5) == EPC_OK);
  epc_code* composed = nullptr;
  char* report = nullptr;
  REQUIRE(epc_code_compose(c5, nullptr, 1, 0, &composed, &report) == EPC_OK);
  CHECK(take(report).find("colors 3\n") != std::string::npos);
  uint32_t q = 0, k = 0, n = 0;
  int linear = 0;
  CHECK(epc_code_info(composed, &q, &k, &n, &linear) == EPC_OK);
  CHECK(q == 2);
  CHECK(k == 2);
  CHECK(n == 5);
  CHECK(linear == 1);
  int valid = 0;
  CHECK(epc_verify(composed, c5, EPC_VERIFY_EXACT, nullptr, 1, &valid, nullptr) == EPC_OK);
  CHECK(valid == 1);

  epc_code* base = nullptr;
  REQUIRE(epc_code_load("eps-q4-n7", &base) == EPC_OK);
  epc_code* composed_eps = nullptr;
  REQUIRE(epc_code_compose(c5, base, 0, 0, &composed_eps, nullptr) == EPC_OK);
  CHECK(epc_verify(composed_eps, c5, EPC_VERIFY_EPS, "1/4", 1, &valid, nullptr) == EPC_OK);
  CHECK(valid == 1);

  epc_code* avg = nullptr;
  REQUIRE(epc_code_average_error(2, 6, &avg) == EPC_OK);
  epc_hypergraph* k6 = nullptr;
  REQUIRE(epc_hypergraph_load("complete:6:2", &k6) == EPC_OK);
  CHECK(epc_verify(avg, k6, EPC_VERIFY_AVG, "1/5", 1, &valid, &report) == EPC_OK);
  CHECK(take(report).find("average_success 9/10\n") != std::string::npos);

  epc_code* pg = nullptr;
  REQUIRE(epc_code_pg(2, 3, &pg) == EPC_OK);
  char* text = nullptr;
  REQUIRE(epc_code_format(pg, &text) == EPC_OK);
  epc_code* parsed = nullptr;
  CHECK(epc_code_parse(text, &parsed) == EPC_OK);
  epc_string_free(text);
  CHECK(epc_code_parse("2 2 2\n0 0\n", &parsed) == EPC_ERR_PARSE);

  for (epc_code* c : {composed, base, composed_eps, avg, pg, parsed}) epc_code_free(c);
  epc_hypergraph_free(k6);
  epc_hypergraph_free(c5);
}

TEST_CASE("fixtures, universal graphs and search") {
  char* report = nullptr;
  REQUIRE(epc_fixtures_list(&report) == EPC_OK);
  std::string list = take(report);
  for (const char* name : {"fano ", "eps-q3-n20 ", "eps-q4-n7 ", "eps-q6-n6 "}) CHECK(list.find(name) != std::string::npos);
  REQUIRE(epc_fixture_show("eps-q6-n6", &report) == EPC_OK);
  CHECK(take(report).find("\n6 2 6\n") != std::string::npos);
  CHECK(epc_fixture_show("nope", &report) == EPC_ERR_ARGUMENT);

  REQUIRE(epc_universal_run(2, "Gq", "enum", 0, 1, &report) == EPC_OK);
  CHECK(take(report) == "0011\n0101\n0110\n1001\n1010\n1100\n");
  REQUIRE(epc_universal_run(4, "Gq_eps", "stats", 3, 1, &report) == EPC_OK);
  std::string stats = take(report);
  CHECK(stats.find("cover_size 270270\n") != std::string::npos);
  CHECK(stats.find("homes_found 10000\n") != std::string::npos);
  CHECK(epc_universal_run(3, "Gq_eps", "cover", 0, 1, &report) == EPC_ERR_ARGUMENT);
  CHECK(epc_universal_run(4, "Gq", "enum", 0, 1, &report) == EPC_ERR_CAP_EXCEEDED);
  CHECK(epc_universal_run(2, "Gq", "dance", 0, 1, &report) == EPC_ERR_ARGUMENT);

  epc_hypergraph* k4 = nullptr;
  REQUIRE(epc_hypergraph_load("complete:4:2", &k4) == EPC_OK);
  int found = 0;
  epc_code* witness = nullptr;
  REQUIRE(epc_search(k4, "0", 3, 0, &found, &report, &witness) == EPC_OK);
  CHECK(found == 1);
  CHECK(take(report).find("q 3\n") != std::string::npos);
  REQUIRE(witness != nullptr);
  int valid = 0;
  CHECK(epc_verify(witness, k4, EPC_VERIFY_EXACT, nullptr, 1, &valid, nullptr) == EPC_OK);
  CHECK(valid == 1);
  epc_code_free(witness);
  REQUIRE(epc_search(k4, "0", 2, 0, &found, &report, &witness) == EPC_OK);
  CHECK(found == 0);
  CHECK(witness == nullptr);
  CHECK(take(report).rfind("verdict absent\n", 0) == 0);
  epc_hypergraph_free(k4);
}

}  // TEST_SUITE
