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

#include <algorithm>

#include "codes.hpp"

namespace epc {

namespace {

using Columns = std::vector<std::vector<Symbol>>;

// Each vector is one codeword position as a function of the q^2 messages in
// lexicographic order.
const Columns kAlphabet3Length20 = {
    {0, 0, 0, 1, 1, 1, 2, 2, 2}, {0, 1, 2, 0, 1, 2, 0, 1, 2}, {0, 0, 1, 0, 1, 2, 1, 2, 2},
    {0, 0, 1, 1, 0, 2, 2, 1, 2}, {0, 0, 1, 1, 2, 0, 2, 2, 1}, {0, 0, 1, 2, 2, 1, 0, 1, 2},
    {0, 1, 0, 1, 2, 0, 2, 1, 2}, {0, 1, 0, 2, 2, 1, 2, 0, 1}, {0, 1, 1, 0, 2, 2, 2, 1, 0},
    {0, 1, 1, 2, 0, 2, 0, 2, 1}, {0, 1, 1, 2, 1, 0, 2, 0, 2}, {0, 1, 1, 2, 2, 0, 1, 2, 0},
    {0, 1, 2, 0, 1, 0, 2, 2, 1}, {0, 1, 2, 0, 2, 1, 1, 0, 2}, {0, 1, 2, 1, 0, 0, 1, 2, 2},
    {0, 1, 2, 1, 0, 2, 2, 0, 1}, {0, 1, 2, 1, 2, 1, 0, 2, 0}, {0, 1, 2, 2, 0, 1, 2, 1, 0},
    {0, 1, 2, 2, 1, 2, 1, 0, 0}, {0, 1, 2, 2, 2, 0, 0, 1, 1},
};

const Columns kAlphabet4Length7 = {
    {0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3},
    {0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3},
    {0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2},
    {0, 1, 2, 3, 2, 3, 0, 1, 1, 2, 3, 0, 3, 0, 1, 2},
    {0, 1, 2, 3, 3, 0, 1, 2, 1, 2, 3, 0, 2, 3, 0, 1},
    {0, 1, 2, 3, 0, 1, 2, 3, 3, 0, 1, 2, 2, 3, 0, 1},
    {0, 1, 2, 3, 2, 3, 0, 1, 2, 3, 0, 1, 1, 2, 3, 0},
};

const Columns kAlphabet6Length6 = {
    {0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 2,
     3, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5},
    {0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5,
     0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5},
    {0, 1, 2, 3, 4, 5, 1, 2, 3, 4, 5, 0, 2, 3, 4, 5, 0, 1,
     3, 4, 5, 0, 1, 2, 4, 5, 0, 1, 2, 3, 5, 0, 1, 2, 3, 4},
    {0, 1, 2, 3, 4, 5, 2, 3, 4, 5, 0, 1, 4, 5, 0, 1, 2, 3,
     1, 2, 3, 4, 5, 0, 3, 4, 5, 0, 1, 2, 5, 0, 1, 2, 3, 4},
    {0, 1, 2, 3, 4, 5, 3, 4, 5, 0, 1, 2, 1, 2, 3, 4, 5, 0,
     5, 0, 1, 2, 3, 4, 2, 3, 4, 5, 0, 1, 0, 1, 2, 3, 4, 5},
    {0, 1, 2, 3, 4, 5, 4, 5, 0, 1, 2, 3, 3, 4, 5, 0, 1, 2,
     2, 3, 4, 5, 0, 1, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5, 0},
};

Code fano_code() {
  const auto& rows = fano_generator_rows();
  std::vector<GaloisField::Element> gen;
  for (const auto& r : rows) gen.insert(gen.end(), r.begin(), r.end());
  return Code::linear(std::make_shared<const GaloisField>(2), 3, 7, std::move(gen));
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
      {"fano", "binary linear code spanned by v1, v2, v3; exact on the Fano complement",
       "fano-complement", Rational(0), fano_code()},
      {"eps-q3-n20", "alphabet 3, 20 positions, per-edge error 1/3 on complete:20:2",
       "complete:20:2", Rational(1, 3), Code::from_columns(3, 2, kAlphabet3Length20)},
      {"eps-q4-n7", "alphabet 4, 7 positions, per-edge error 1/4 on complete:7:2",
       "complete:7:2", Rational(1, 4), Code::from_columns(4, 2, kAlphabet4Length7)},
      {"eps-q6-n6", "alphabet 6, 6 positions, per-edge error 1/6 on complete:6:2",
       "complete:6:2", Rational(1, 6), Code::from_columns(6, 2, kAlphabet6Length6)},
  };
  return all;
}

const Fixture* find_fixture(std::string_view name) {
  const auto& all = fixtures();
  auto it = std::find_if(all.begin(), all.end(), [&](const Fixture& f) { return f.name == name; });
  return it == all.end() ? nullptr : &*it;
}

}  // namespace epc
