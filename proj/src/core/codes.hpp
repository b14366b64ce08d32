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
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "hypergraph.hpp"
#include "rational.hpp"

namespace epc {

using Symbol = std::uint32_t;
using Message = std::vector<Symbol>;

// Nonlinear tables and materialized linear tables are limited to this many
// messages (rows).
inline constexpr std::uint64_t kMaxTableRows = 1'000'000;

// An encoder F^k -> F^n over the alphabet [q]. Messages are enumerated in
// lexicographic order of [q]^k (first coordinate most significant), so row r
// of the table is the codeword of the r-th message. A linear code also keeps
// its k x n generator over GF(q) and may omit the table when q^k exceeds
// kMaxTableRows.
class Code {
 public:
  static Code from_table(std::uint32_t q, std::uint32_t k, std::uint32_t n,
                         std::vector<Symbol> table);
  // columns[j][r] = symbol of column j for message r.
  static Code from_columns(std::uint32_t q, std::uint32_t k,
                           const std::vector<std::vector<Symbol>>& columns);
  // generator is k x n, row-major.
  static Code linear(std::shared_ptr<const GaloisField> field, std::uint32_t k, std::uint32_t n,
                     std::vector<GaloisField::Element> generator);

  std::uint32_t alphabet_size() const noexcept { return q_; }
  std::uint32_t dimension() const noexcept { return k_; }
  std::uint32_t length() const noexcept { return n_; }
  // q^k; throws kCapExceeded if it does not fit in 64 bits.
  std::uint64_t message_count() const;

  bool has_table() const noexcept { return materialized_; }
  bool is_linear() const noexcept { return linear_; }
  const GaloisField& field() const;
  std::shared_ptr<const GaloisField> field_ptr() const { return field_; }
  std::span<const GaloisField::Element> generator() const { return generator_; }

  // Requires a materialized table.
  Symbol at(std::uint64_t message, std::uint32_t column) const {
    return table_[message * n_ + column];
  }
  std::vector<Symbol> column(std::uint32_t j) const;

  Message message_digits(std::uint64_t index) const;
  std::uint64_t message_index(std::span<const Symbol> m) const;

  std::vector<Symbol> encode(std::span<const Symbol> m) const;
  // Keeps positions of `edge` (0-based), nullopt (erasure) elsewhere.
  std::vector<std::optional<Symbol>> erase(std::span<const Symbol> m,
                                           std::span<const Vertex> edge) const;

  friend bool operator==(const Code& a, const Code& b);

 private:
  void check_message(std::span<const Symbol> m) const;

  std::uint32_t q_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t n_ = 0;
  std::vector<std::uint16_t> table_;
  bool materialized_ = false;
  bool linear_ = false;
  std::shared_ptr<const GaloisField> field_;
  std::vector<GaloisField::Element> generator_;
};

// Optimal decoder for one edge: each observed tuple decodes to its
// lexicographically smallest preimage.
class EdgeDecoder {
 public:
  EdgeDecoder(const Code& c, std::span<const Vertex> edge);

  const std::vector<Vertex>& edge() const noexcept { return edge_; }
  std::size_t distinct_tuples() const noexcept { return map_.size(); }
  // nullopt when an edge position is erased or the tuple never occurs.
  std::optional<Message> decode(std::span<const std::optional<Symbol>> word) const;

 private:
  const Code* code_;
  std::vector<Vertex> edge_;
  std::unordered_map<std::uint64_t, std::uint64_t> map_;
};

// Fraction of messages recovered by the optimal decoder on this edge, i.e.
// (#distinct restricted tuples) / q^k.
Rational edge_success(const Code& c, std::span<const Vertex> edge);

// For linear codes: is the k x k generator submatrix on `edge` invertible?
bool linear_edge_invertible(const Code& c, std::span<const Vertex> edge);

// Linear codes: color each vertex by the index of its normalized generator
// column among normalized_vectors(field, k). Zero columns get color 0.
Coloring normalized_column_coloring(const Code& c);

enum class VerifyMode { kExact, kEpsilon, kAverage };

struct Certificate {
  VerifyMode mode = VerifyMode::kExact;
  bool valid = true;
  Rational threshold = 1;  // required success per edge (or on average)
  std::size_t edges = 0;
  std::optional<std::vector<Vertex>> failing_edge;  // lexicographically first
  std::optional<std::pair<Message, Message>> collision;  // exact mode
  std::optional<std::vector<Vertex>> min_edge;
  Rational min_success = 1;
  std::optional<Rational> average_success;
};

struct VerifyOptions {
  unsigned jobs = 1;
};

Certificate verify_exact(const Code& c, const Hypergraph& g, VerifyOptions opts = {});
Certificate verify_eps(const Code& c, const Hypergraph& g, const Rational& eps,
                       VerifyOptions opts = {});
Certificate verify_avg(const Code& c, const Hypergraph& g, const Rational& eps,
                       VerifyOptions opts = {});

// Line-oriented "key value" report; vertices and messages 1-based / comma
// separated.
std::string format_certificate(const Certificate& cert);

// Columns (1, a, ..., a^{k-1}) for the first min(n, q) field elements in
// increasing encoding, plus (0, ..., 0, 1) when n = q + 1.
Code rs_code(std::shared_ptr<const GaloisField> field, std::uint32_t n, std::uint32_t k);

struct Fixture {
  std::string name;
  std::string description;
  std::string hypergraph;  // shorthand it is certified against
  Rational epsilon;        // 0 for exact
  Code code;
};

const std::vector<Fixture>& fixtures();
const Fixture* find_fixture(std::string_view name);

// "<q> <k> <n> [linear]" then generator rows (linear) or q^k table rows.
Code parse_code(std::string_view text);
std::string format_code(const Code& c);
// Fixture name or file path.
Code load_code(const std::string& spec);

}  // namespace epc
