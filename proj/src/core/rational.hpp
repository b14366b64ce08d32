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
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace epc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "a/b", "a" or a finite decimal such as "0.25". Throws
// Error(kParse) on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

// Always "a/b" in lowest terms, including integers ("1/1").
std::string format_rational(const Rational& r);

BigInt binomial(unsigned n, unsigned k);
BigInt factorial(unsigned n);

}  // namespace epc
