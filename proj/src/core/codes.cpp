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

#include "codes.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "combinatorics.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "text.hpp"

namespace epc {

namespace {

std::uint64_t rows_or_throw(std::uint32_t q, std::uint32_t k, std::uint64_t limit) {
  const std::uint64_t rows = checked_pow(q, k, limit);
  if (rows == 0)
    fail(ErrorKind::kCapExceeded, "q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                                      " exceeds the table cap of " + std::to_string(limit) +
                                      " rows");
  return rows;
}

void check_shape(std::uint32_t q, std::uint32_t k) {
  require(q >= 2, "alphabet size must be at least 2");
  require(q <= GaloisField::kMaxOrder, "alphabet size must be at most 65536");
  require(k >= 1, "message length must be at least 1");
}

}  // namespace

Code Code::from_table(std::uint32_t q, std::uint32_t k, std::uint32_t n, std::vector<Symbol> table) {
  check_shape(q, k);
  const std::uint64_t rows = rows_or_throw(q, k, kMaxTableRows);
  require(table.size() == rows * n, "table must have q^k rows of n symbols");
  Code c;
  c.q_ = q;
  c.k_ = k;
  c.n_ = n;
  c.table_.reserve(table.size());
  for (Symbol s : table) {
    require(s < q, "symbol " + std::to_string(s) + " out of range for alphabet " + std::to_string(q));
    c.table_.push_back(static_cast<std::uint16_t>(s));
  }
  c.materialized_ = true;
  return c;
}

Code Code::from_columns(std::uint32_t q, std::uint32_t k, const std::vector<std::vector<Symbol>>& columns) {
  check_shape(q, k);
  const std::uint64_t rows = rows_or_throw(q, k, kMaxTableRows);
  const auto n = static_cast<std::uint32_t>(columns.size());
  std::vector<Symbol> table(rows * n);
  for (std::uint32_t j = 0; j < n; ++j) {
    require(columns[j].size() == rows, "column " + std::to_string(j + 1) + " must have q^k entries");
    for (std::uint64_t r = 0; r < rows; ++r) table[r * n + j] = columns[j][r];
  }
  return from_table(q, k, n, std::move(table));
}

Code Code::linear(std::shared_ptr<const GaloisField> field, std::uint32_t k, std::uint32_t n,
                  std::vector<GaloisField::Element> generator) {
  require(field != nullptr, "linear code needs a field");
  const std::uint32_t q = field->order();
  check_shape(q, k);
  require(generator.size() == static_cast<std::size_t>(k) * n, "generator must be k x n");
  for (auto g : generator)
    require(field->contains(g), "generator entry " + std::to_string(g) + " not in GF(" +
                                    std::to_string(q) + ")");
  Code c;
  c.q_ = q;
  c.k_ = k;
  c.n_ = n;
  c.linear_ = true;
  c.field_ = std::move(field);
  c.generator_ = std::move(generator);
  const std::uint64_t rows = checked_pow(q, k, kMaxTableRows);
  if (rows != 0) {
    c.table_.assign(rows * n, 0);
    std::vector<Symbol> m(k, 0);
    for (std::uint64_t r = 0; r < rows; ++r, next_tuple(m, q)) {
      for (std::uint32_t j = 0; j < n; ++j) {
        GaloisField::Element acc = 0;
        for (std::uint32_t i = 0; i < k; ++i)
          if (m[i] != 0) acc = c.field_->add(acc, c.field_->mul(m[i], c.generator_[i * n + j]));
        c.table_[r * n + j] = static_cast<std::uint16_t>(acc);
      }
    }
    c.materialized_ = true;
  }
  return c;
}

std::uint64_t Code::message_count() const {
  const std::uint64_t rows = checked_pow(q_, k_, UINT64_MAX);
  if (rows == 0) fail(ErrorKind::kCapExceeded, "q^k does not fit in 64 bits");
  return rows;
}

const GaloisField& Code::field() const {
  if (!field_) fail(ErrorKind::kArgument, "code is not linear");
  return *field_;
}

std::vector<Symbol> Code::column(std::uint32_t j) const {
  require(j < n_, "column out of range");
  if (!materialized_) fail(ErrorKind::kCapExceeded, "code table not materialized");
  const std::uint64_t rows = message_count();
  std::vector<Symbol> col(rows);
  for (std::uint64_t r = 0; r < rows; ++r) col[r] = at(r, j);
  return col;
}

Message Code::message_digits(std::uint64_t index) const {
  Message m(k_, 0);
  for (std::uint32_t i = k_; i-- > 0;) {
    m[i] = static_cast<Symbol>(index % q_);
    index /= q_;
  }
  return m;
}

std::uint64_t Code::message_index(std::span<const Symbol> m) const {
  check_message(m);
  std::uint64_t idx = 0;
  for (Symbol s : m) idx = idx * q_ + s;
  return idx;
}

void Code::check_message(std::span<const Symbol> m) const {
  require(m.size() == k_, "message must have " + std::to_string(k_) + " symbols");
  for (Symbol s : m)
    require(s < q_, "message symbol " + std::to_string(s) + " out of range for alphabet " +
                        std::to_string(q_));
}

std::vector<Symbol> Code::encode(std::span<const Symbol> m) const {
  check_message(m);
  std::vector<Symbol> word(n_);
  if (materialized_) {
    const std::uint64_t r = message_index(m);
    for (std::uint32_t j = 0; j < n_; ++j) word[j] = at(r, j);
    return word;
  }
  for (std::uint32_t j = 0; j < n_; ++j) {
    GaloisField::Element acc = 0;
    for (std::uint32_t i = 0; i < k_; ++i)
      acc = field_->add(acc, field_->mul(m[i], generator_[i * n_ + j]));
    word[j] = acc;
  }
  return word;
}

namespace {

void check_edge(const Code& c, std::span<const Vertex> edge) {
  require(edge.size() == c.dimension(), "edge must have exactly k = " +
                                            std::to_string(c.dimension()) + " positions");
  std::vector<Vertex> sorted(edge.begin(), edge.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    require(sorted[i] < c.length(), "edge position " + std::to_string(sorted[i] + 1) +
                                        " out of range for block length " +
                                        std::to_string(c.length()));
    require(i == 0 || sorted[i] != sorted[i - 1], "edge repeats a position");
  }
}

std::uint64_t tuple_key(const Code& c, std::uint64_t message, std::span<const Vertex> edge) {
  std::uint64_t key = 0;
  for (Vertex v : edge) key = key * c.alphabet_size() + c.at(message, v);
  return key;
}

}  // namespace

std::vector<std::optional<Symbol>> Code::erase(std::span<const Symbol> m,
                                               std::span<const Vertex> edge) const {
  std::vector<bool> seen(n_, false);
  for (Vertex v : edge) {
    require(v < n_, "edge position out of range");
    require(!seen[v], "edge repeats position " + std::to_string(v + 1));
    seen[v] = true;
  }
  const auto word = encode(m);
  std::vector<std::optional<Symbol>> out(n_);
  for (Vertex v : edge) out[v] = word[v];
  return out;
}

bool operator==(const Code& a, const Code& b) {
  if (a.q_ != b.q_ || a.k_ != b.k_ || a.n_ != b.n_ || a.linear_ != b.linear_) return false;
  if (a.linear_) return a.generator_ == b.generator_;
  return a.table_ == b.table_;
}

EdgeDecoder::EdgeDecoder(const Code& c, std::span<const Vertex> edge)
    : code_(&c), edge_(edge.begin(), edge.end()) {
  check_edge(c, edge);
  if (!c.has_table()) fail(ErrorKind::kCapExceeded, "decoder needs a materialized table");
  const std::uint64_t rows = c.message_count();
  for (std::uint64_t r = 0; r < rows; ++r) map_.try_emplace(tuple_key(c, r, edge_), r);
}

std::optional<Message> EdgeDecoder::decode(std::span<const std::optional<Symbol>> word) const {
  if (word.size() != code_->length()) return std::nullopt;
  std::uint64_t key = 0;
  for (Vertex v : edge_) {
    if (!word[v] || *word[v] >= code_->alphabet_size()) return std::nullopt;
    key = key * code_->alphabet_size() + *word[v];
  }
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return code_->message_digits(it->second);
}

namespace {

std::size_t generator_rank_on(const Code& c, std::span<const Vertex> edge) {
  const std::uint32_t k = c.dimension(), n = c.length();
  std::vector<GaloisField::Element> sub(static_cast<std::size_t>(k) * edge.size());
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < edge.size(); ++j) sub[i * edge.size() + j] = c.generator()[i * n + edge[j]];
  return c.field().rank(sub, k, edge.size());
}

std::uint64_t distinct_tuples(const Code& c, std::span<const Vertex> edge) {
  const std::uint64_t rows = c.message_count();
  std::vector<bool> seen(rows, false);  // tuple space is q^k as well
  std::uint64_t distinct = 0;
  for (std::uint64_t r = 0; r < rows; ++r) {
    const auto key = tuple_key(c, r, edge);
    if (!seen[key]) {
      seen[key] = true;
      ++distinct;
    }
  }
  return distinct;
}

Rational success_of(const Code& c, std::span<const Vertex> edge) {
  if (c.has_table()) return Rational(distinct_tuples(c, edge), c.message_count());
  const std::size_t deficit = c.dimension() - generator_rank_on(c, edge);
  return Rational(BigInt(1), boost::multiprecision::pow(BigInt(c.alphabet_size()),
                                                        static_cast<unsigned>(deficit)));
}

}  // namespace

Rational edge_success(const Code& c, std::span<const Vertex> edge) {
  check_edge(c, edge);
  return success_of(c, edge);
}

bool linear_edge_invertible(const Code& c, std::span<const Vertex> edge) {
  check_edge(c, edge);
  if (!c.is_linear()) fail(ErrorKind::kArgument, "code is not linear");
  return generator_rank_on(c, edge) == c.dimension();
}

Coloring normalized_column_coloring(const Code& c) {
  if (!c.is_linear()) fail(ErrorKind::kArgument, "code is not linear");
  const GaloisField& f = c.field();
  const std::uint32_t k = c.dimension();
  const auto reps = normalized_vectors(f, k);
  Coloring out{std::vector<std::uint32_t>(c.length(), 0), static_cast<std::uint32_t>(reps.size())};
  auto gen = c.generator();
  for (std::uint32_t j = 0; j < c.length(); ++j) {
    std::vector<std::uint32_t> col(k);
    for (std::uint32_t i = 0; i < k; ++i) col[i] = gen[i * c.length() + j];
    auto lead = std::find_if(col.begin(), col.end(), [](std::uint32_t x) { return x != 0; });
    if (lead == col.end()) continue;
    const auto scale = f.inv(*lead);
    for (auto& x : col) x = f.mul(x, scale);
    auto it = std::find(reps.begin(), reps.end(), col);
    out.colors[j] = static_cast<std::uint32_t>(it - reps.begin());
  }
  return out;
}

namespace {

void check_dims(const Code& c, const Hypergraph& g) {
  if (c.length() != g.vertex_count() || c.dimension() != g.uniformity())
    fail(ErrorKind::kArgument,
         "dimension mismatch: code has n=" + std::to_string(c.length()) + " k=" +
             std::to_string(c.dimension()) + ", hypergraph has n=" + std::to_string(g.vertex_count()) +
             " k=" + std::to_string(g.uniformity()));
}

std::vector<Rational> all_successes(const Code& c, const Hypergraph& g, unsigned jobs) {
  std::vector<Rational> out(g.edge_count());
  parallel_for(g.edge_count(), jobs, [&](std::size_t i) { out[i] = success_of(c, g.edge(i)); });
  return out;
}

std::vector<Vertex> to_vec(std::span<const Vertex> e) { return {e.begin(), e.end()}; }

std::pair<Message, Message> find_collision(const Code& c, std::span<const Vertex> edge) {
  if (c.has_table()) {
    std::unordered_map<std::uint64_t, std::uint64_t> first;
    const std::uint64_t rows = c.message_count();
    for (std::uint64_t r = 0; r < rows; ++r) {
      auto [it, inserted] = first.try_emplace(tuple_key(c, r, edge), r);
      if (!inserted) return {c.message_digits(it->second), c.message_digits(r)};
    }
    fail(ErrorKind::kArgument, "no collision on edge");
  }
  // Above the table cap: the zero message and a kernel vector of the
  // transposed edge submatrix share the all-zero restriction.
  const std::uint32_t k = c.dimension(), n = c.length();
  std::vector<GaloisField::Element> sub_t(edge.size() * k);
  for (std::size_t j = 0; j < edge.size(); ++j)
    for (std::uint32_t i = 0; i < k; ++i) sub_t[j * k + i] = c.generator()[i * n + edge[j]];
  auto basis = c.field().kernel(sub_t, edge.size(), k);
  if (basis.empty()) fail(ErrorKind::kArgument, "no collision on edge");
  return {Message(k, 0), basis.front()};
}

}  // namespace

Certificate verify_exact(const Code& c, const Hypergraph& g, VerifyOptions opts) {
  check_dims(c, g);
  Certificate cert;
  cert.mode = VerifyMode::kExact;
  cert.threshold = 1;
  cert.edges = g.edge_count();
  const auto succ = all_successes(c, g, opts.jobs);
  for (std::size_t i = 0; i < succ.size(); ++i) {
    if (!cert.min_edge || succ[i] < cert.min_success) {
      cert.min_edge = to_vec(g.edge(i));
      cert.min_success = succ[i];
    }
    if (succ[i] != 1 && !cert.failing_edge) {
      cert.valid = false;
      cert.failing_edge = to_vec(g.edge(i));
      cert.collision = find_collision(c, g.edge(i));
    }
  }
  return cert;
}

Certificate verify_eps(const Code& c, const Hypergraph& g, const Rational& eps, VerifyOptions opts) {
  require(eps >= 0 && eps < 1, "epsilon must satisfy 0 <= eps < 1");
  check_dims(c, g);
  Certificate cert;
  cert.mode = VerifyMode::kEpsilon;
  cert.threshold = 1 - eps;
  cert.edges = g.edge_count();
  const auto succ = all_successes(c, g, opts.jobs);
  for (std::size_t i = 0; i < succ.size(); ++i) {
    if (!cert.min_edge || succ[i] < cert.min_success) {
      cert.min_edge = to_vec(g.edge(i));
      cert.min_success = succ[i];
    }
    if (succ[i] < cert.threshold && !cert.failing_edge) {
      cert.valid = false;
      cert.failing_edge = to_vec(g.edge(i));
    }
  }
  return cert;
}

Certificate verify_avg(const Code& c, const Hypergraph& g, const Rational& eps, VerifyOptions opts) {
  require(eps >= 0 && eps < 1, "epsilon must satisfy 0 <= eps < 1");
  check_dims(c, g);
  if (g.edge_count() == 0) fail(ErrorKind::kArgument, "average success needs at least one edge");
  Certificate cert;
  cert.mode = VerifyMode::kAverage;
  cert.threshold = 1 - eps;
  cert.edges = g.edge_count();
  const auto succ = all_successes(c, g, opts.jobs);
  Rational total = 0;
  for (std::size_t i = 0; i < succ.size(); ++i) {
    total += succ[i];
    if (!cert.min_edge || succ[i] < cert.min_success) {
      cert.min_edge = to_vec(g.edge(i));
      cert.min_success = succ[i];
    }
  }
  cert.average_success = total / static_cast<std::uint64_t>(succ.size());
  cert.valid = *cert.average_success >= cert.threshold;
  return cert;
}

namespace {

std::string join_vertices(const std::vector<Vertex>& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) s += (i ? " " : "") + std::to_string(e[i] + 1);
  return s;
}

std::string join_message(const Message& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s;
}

}  // namespace

std::string format_certificate(const Certificate& cert) {
  std::ostringstream out;
  static const char* kModes[] = {"exact", "eps", "avg"};
  out << "verdict " << (cert.valid ? "valid" : "invalid") << '\n';
  out << "mode " << kModes[static_cast<int>(cert.mode)] << '\n';
  out << "edges " << cert.edges << '\n';
  out << "threshold " << format_rational(cert.threshold) << '\n';
  if (cert.min_edge) {
    out << "min_edge " << join_vertices(*cert.min_edge) << '\n';
    out << "min_success " << format_rational(cert.min_success) << '\n';
  }
  if (cert.average_success) out << "average_success " << format_rational(*cert.average_success) << '\n';
  if (cert.failing_edge) out << "failing_edge " << join_vertices(*cert.failing_edge) << '\n';
  if (cert.collision)
    out << "collision " << join_message(cert.collision->first) << ' '
        << join_message(cert.collision->second) << '\n';
  return out.str();
}

Code rs_code(std::shared_ptr<const GaloisField> field, std::uint32_t n, std::uint32_t k) {
  require(field != nullptr, "rs_code needs a field");
  const std::uint32_t q = field->order();
  require(k >= 1 && k <= n, "rs_code needs 1 <= k <= n");
  if (n > q + 1)
    fail(ErrorKind::kArgument, "rs_code needs n <= q + 1 (n=" + std::to_string(n) + ", q=" +
                                   std::to_string(q) + ")");
  std::vector<GaloisField::Element> gen(static_cast<std::size_t>(k) * n, 0);
  const std::uint32_t points = std::min(n, q);
  for (std::uint32_t j = 0; j < points; ++j) {
    GaloisField::Element power = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
      gen[i * n + j] = power;
      power = field->mul(power, j);
    }
  }
  if (n == q + 1) gen[(k - 1) * n + q] = 1;
  return Code::linear(std::move(field), k, n, std::move(gen));
}

Code parse_code(std::string_view text) {
  const auto lines = text::tokenize(text);
  if (lines.empty()) fail(ErrorKind::kParse, "line 1: missing '<q> <k> <n> [linear]' header");
  const auto& head = lines.front();
  if (head.tokens.size() != 3 && head.tokens.size() != 4)
    text::parse_error(head.number, "header must be '<q> <k> <n> [linear]'");
  const bool linear = head.tokens.size() == 4;
  if (linear && head.tokens[3] != "linear")
    text::parse_error(head.number, "unknown header flag '" + std::string(head.tokens[3]) + "'");
  const auto q = text::parse_uint(head.tokens[0], head.number);
  const auto k = text::parse_uint(head.tokens[1], head.number);
  const auto n = text::parse_uint(head.tokens[2], head.number);
  if (q < 2 || q > GaloisField::kMaxOrder) text::parse_error(head.number, "q must be in [2, 65536]");
  if (k < 1 || k > 64) text::parse_error(head.number, "k must be in [1, 64]");
  if (n > 1'000'000) text::parse_error(head.number, "n too large");

  std::uint64_t rows = 0;
  std::shared_ptr<const GaloisField> field;
  if (linear) {
    if (!is_prime_power(q)) text::parse_error(head.number, "linear code needs a prime power q");
    field = std::make_shared<const GaloisField>(static_cast<std::uint32_t>(q));
    rows = k;
  } else {
    rows = checked_pow(q, k, kMaxTableRows);
    if (rows == 0) text::parse_error(head.number, "q^k exceeds the table cap");
  }
  if (lines.size() - 1 != rows)
    text::parse_error(lines.back().number, "expected " + std::to_string(rows) + " rows, found " +
                                               std::to_string(lines.size() - 1));
  std::vector<Symbol> values;
  values.reserve(rows * n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != n)
      text::parse_error(line.number, "row has " + std::to_string(line.tokens.size()) +
                                         " entries, expected " + std::to_string(n));
    for (auto tok : line.tokens) {
      const auto v = text::parse_uint(tok, line.number);
      if (v >= q) text::parse_error(line.number, "symbol " + std::string(tok) + " not in [0, q)");
      values.push_back(static_cast<Symbol>(v));
    }
  }
  if (linear)
    return Code::linear(field, static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(n),
                        std::move(values));
  return Code::from_table(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(k),
                          static_cast<std::uint32_t>(n), std::move(values));
}

std::string format_code(const Code& c) {
  std::ostringstream out;
  const std::uint32_t n = c.length();
  out << c.alphabet_size() << ' ' << c.dimension() << ' ' << n;
  auto row = [&](auto&& value) {
    for (std::uint32_t j = 0; j < n; ++j) out << (j ? " " : "") << value(j);
    out << '\n';
  };
  if (c.is_linear()) {
    out << " linear\n";
    for (std::uint32_t i = 0; i < c.dimension(); ++i)
      row([&](std::uint32_t j) { return c.generator()[i * n + j]; });
  } else {
    out << '\n';
    const std::uint64_t rows = c.message_count();
    for (std::uint64_t r = 0; r < rows; ++r) row([&](std::uint32_t j) { return c.at(r, j); });
  }
  return out.str();
}

Code load_code(const std::string& spec) {
  if (const Fixture* f = find_fixture(spec)) return f->code;
  std::ifstream probe(spec);
  if (!probe) fail(ErrorKind::kArgument, "'" + spec + "' is neither a fixture name nor a readable file");
  return parse_code(text::read_file(spec));
}

}  // namespace epc
