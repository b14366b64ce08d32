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

#include "galois.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace epc {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t x) {
  if (x < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    if (x % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{static_cast<std::uint32_t>(x), 1};
  std::uint32_t m = 0;
  while (x % p == 0) {
    x /= p;
    ++m;
  }
  if (x != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), m};
}

bool is_prime_power(std::uint64_t x) { return as_prime_power(x).has_value(); }

std::uint64_t next_prime_power(std::uint64_t x) {
  std::uint64_t q = std::max<std::uint64_t>(x, 2);
  while (!is_prime_power(q)) ++q;
  return q;
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime and small, Fermat is fine.
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero and trimmed.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Advances the low-to-high coefficient vector (first `len` entries) to the
// next tuple in lexicographic order with entry 0 most significant.
bool next_tuple_lex(Poly& c, std::size_t len, std::uint32_t p) {
  for (std::size_t i = len; i-- > 0;) {
    if (++c[i] < p) return true;
    c[i] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible(std::span<const std::uint32_t> poly, std::uint32_t p) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    do {
      if (poly_mod(f, g, p).empty()) return false;
    } while (next_tuple_lex(g, d, p));
  }
  return true;
}

GaloisField::GaloisField(std::uint32_t q) {
  auto pp = as_prime_power(q);
  if (!pp || q > kMaxOrder)
    fail(ErrorKind::kArgument, "field order " + std::to_string(q) +
                                   " is not a prime power in [2, 65536]");
  p_ = pp->prime;
  m_ = pp->exponent;
  q_ = q;

  poly_.assign(m_ + 1, 0);
  poly_[m_] = 1;
  bool found = false;
  do {
    if (is_irreducible(poly_, p_)) {
      found = true;
      break;
    }
  } while (next_tuple_lex(poly_, m_, p_));
  if (!found) fail(ErrorKind::kArgument, "no irreducible polynomial found");

  if (q_ <= kTableOrder) {
    mul_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Element a = 0; a < q_; ++a)
      for (Element b = 0; b < q_; ++b)
        mul_table_[a * q_ + b] = static_cast<std::uint16_t>(mul_slow(a, b));
    inv_table_.assign(q_, 0);
    for (Element a = 1; a < q_; ++a)
      for (Element b = 1; b < q_; ++b)
        if (mul_table_[a * q_ + b] == 1) {
          inv_table_[a] = static_cast<std::uint16_t>(b);
          break;
        }
  }
}

void GaloisField::check(Element a) const {
  if (a >= q_)
    fail(ErrorKind::kArgument, "element " + std::to_string(a) + " out of range for GF(" +
                                   std::to_string(q_) + ")");
}

GaloisField::Element GaloisField::add_digits(Element a, Element b, bool subtract) const {
  if (p_ == 2) return a ^ b;
  Element out = 0, scale = 1;
  while (a != 0 || b != 0) {
    const Element da = a % p_, db = b % p_;
    const Element d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
    out += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

GaloisField::Element GaloisField::add(Element a, Element b) const {
  check(a);
  check(b);
  return add_digits(a, b, false);
}

GaloisField::Element GaloisField::sub(Element a, Element b) const {
  check(a);
  check(b);
  return add_digits(a, b, true);
}

GaloisField::Element GaloisField::neg(Element a) const { return sub(0, a); }

GaloisField::Element GaloisField::mul_slow(Element a, Element b) const {
  if (m_ == 1) return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  Poly x(m_, 0), y(m_, 0);
  for (std::uint32_t i = 0; i < m_; ++i) {
    x[i] = a % p_;
    a /= p_;
    y[i] = b % p_;
    b /= p_;
  }
  Poly prod(2 * m_ - 1, 0);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
  Poly r = poly_mod(std::move(prod), poly_, p_);
  Element out = 0;
  for (std::size_t i = r.size(); i-- > 0;) out = out * p_ + r[i];
  return out;
}

GaloisField::Element GaloisField::mul(Element a, Element b) const {
  check(a);
  check(b);
  if (!mul_table_.empty()) return mul_table_[a * q_ + b];
  return mul_slow(a, b);
}

GaloisField::Element GaloisField::inv(Element a) const {
  check(a);
  if (a == 0) fail(ErrorKind::kArgument, "zero has no multiplicative inverse");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

GaloisField::Element GaloisField::pow(Element a, std::uint64_t e) const {
  check(a);
  Element r = 1, b = a;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
  }
  return r;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(const GaloisField& f, std::vector<GaloisField::Element>& a,
                                    std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const auto scale = f.inv(a[r * cols + c]);
    for (std::size_t j = 0; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i * cols + c] == 0) continue;
      const auto factor = a[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t GaloisField::rank(std::span<const Element> matrix, std::size_t rows,
                              std::size_t cols) const {
  require(matrix.size() == rows * cols, "matrix size mismatch");
  std::vector<Element> a(matrix.begin(), matrix.end());
  return row_reduce(*this, a, rows, cols).size();
}

std::vector<std::vector<GaloisField::Element>> GaloisField::kernel(
    std::span<const Element> matrix, std::size_t rows, std::size_t cols) const {
  require(matrix.size() == rows * cols, "matrix size mismatch");
  std::vector<Element> a(matrix.begin(), matrix.end());
  const auto pivots = row_reduce(*this, a, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Element> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = neg(a[i * cols + free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace epc
