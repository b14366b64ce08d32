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
#include <span>
#include <vector>

namespace epc {

bool is_prime(std::uint64_t x);

struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;
};

// Decomposes x = p^m with m >= 1, or nullopt.
std::optional<PrimePower> as_prime_power(std::uint64_t x);
bool is_prime_power(std::uint64_t x);
// Smallest prime power >= max(x, 2).
std::uint64_t next_prime_power(std::uint64_t x);

// GF(p^m) with elements encoded as integers value = sum c_i p^i, where c_i is
// the coefficient of x^i in the polynomial representative. The reduction
// polynomial is the lexicographically smallest monic irreducible of degree m
// (coefficients compared from the constant term upward).
//
// Immutable after construction.
class GaloisField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kMaxOrder = 1u << 16;
  static constexpr std::uint32_t kTableOrder = 256;

  // Throws Error(kArgument) unless q is a prime power in [2, 2^16].
  explicit GaloisField(std::uint32_t q);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  // Coefficients low-to-high, length m + 1, leading coefficient 1.
  const std::vector<std::uint32_t>& reduction_polynomial() const noexcept { return poly_; }

  bool contains(Element a) const noexcept { return a < q_; }

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;

  // Rank of a row-major rows x cols matrix over this field.
  std::size_t rank(std::span<const Element> matrix, std::size_t rows, std::size_t cols) const;

  // Basis of the right kernel {x : matrix * x = 0}; each vector has length cols.
  std::vector<std::vector<Element>> kernel(std::span<const Element> matrix, std::size_t rows,
                                           std::size_t cols) const;

 private:
  void check(Element a) const;
  Element add_digits(Element a, Element b, bool subtract) const;
  Element mul_slow(Element a, Element b) const;

  std::uint32_t p_ = 0;
  std::uint32_t m_ = 0;
  std::uint32_t q_ = 0;
  std::vector<std::uint32_t> poly_;
  std::vector<std::uint16_t> mul_table_;  // q*q entries when q <= kTableOrder
  std::vector<std::uint16_t> inv_table_;
};

// Exposed for tests: is the monic polynomial (coefficients low-to-high) over
// GF(p) irreducible? Trial division by every monic of degree 1..deg/2.
bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p);

}  // namespace epc
