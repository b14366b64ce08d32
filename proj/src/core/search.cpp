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

#include "search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "combinatorics.hpp"
#include "construct.hpp"
#include "error.hpp"

namespace epc {

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kAbsent: return "absent";
    case SearchStatus::kUnknown: return "unknown";
  }
  return "?";
}

namespace {

std::vector<Vertex> degree_order(const Hypergraph& g) {
  std::vector<std::size_t> degree(g.vertex_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    for (Vertex v : g.edge(i)) ++degree[v];
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (degree[v] > 0) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
  return order;
}

// Sorted symbol-count profile; equal profiles <=> same orbit under symbol
// relabeling combined with coordinate permutation.
std::vector<std::uint32_t> count_profile(const UniversalVertex& u) {
  std::vector<std::uint32_t> count(u.q, 0);
  for (auto s : u.data) ++count[s];
  std::sort(count.begin(), count.end());
  return count;
}

class HomSearcher {
 public:
  HomSearcher(const Hypergraph& g, const std::vector<UniversalVertex>& targets,
              const AdjacencyMatrix& adj, std::uint64_t budget)
      : g_(g), targets_(targets), adj_(adj), budget_(budget), words_(adj.words()) {
    order_ = degree_order(g);
    neighbors_.resize(g.vertex_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      auto e = g.edge(i);
      neighbors_[e[0]].push_back(e[1]);
      neighbors_[e[1]].push_back(e[0]);
    }
    position_.assign(g.vertex_count(), SIZE_MAX);
    for (std::size_t i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
  }

  HomSearchResult run() {
    HomSearchResult r;
    assignment_.assign(g_.vertex_count(), SIZE_MAX);
    if (order_.empty()) {
      r.status = SearchStatus::kFound;
    } else {
      // Domains per depth: depth d holds the domains of order_[d..].
      std::vector<std::uint64_t> domains(order_.size() * words_, ~std::uint64_t{0});
      const std::size_t tail = adj_.size() % 64;
      if (tail != 0)
        for (std::size_t i = 0; i < order_.size(); ++i) domains[i * words_ + words_ - 1] = (std::uint64_t{1} << tail) - 1;
      // First vertex: one representative per orbit.
      std::fill(domains.begin(), domains.begin() + static_cast<std::ptrdiff_t>(words_), 0);
      std::map<std::vector<std::uint32_t>, bool> seen;
      for (std::size_t t = 0; t < targets_.size(); ++t)
        if (seen.emplace(count_profile(targets_[t]), true).second) domains[t / 64] |= std::uint64_t{1} << (t % 64);
      const bool found = search(0, domains);
      r.status = found ? SearchStatus::kFound : (aborted_ ? SearchStatus::kUnknown : SearchStatus::kAbsent);
    }
    r.nodes = nodes_;
    if (r.status == SearchStatus::kFound) {
      const auto fallback = targets_.front();
      for (Vertex v = 0; v < g_.vertex_count(); ++v)
        r.map.push_back(assignment_[v] == SIZE_MAX ? fallback : targets_[assignment_[v]]);
    }
    return r;
  }

 private:
  bool search(std::size_t depth, std::vector<std::uint64_t>& domains) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    const std::size_t base = depth * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = domains[base + w];
      while (bits != 0) {
        const std::size_t t = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        if (nodes_ >= budget_) {
          aborted_ = true;
          return false;
        }
        ++nodes_;
        assignment_[v] = t;
        // Next level's domains: copy, then restrict unassigned neighbors.
        std::vector<std::uint64_t> next(domains.begin() + static_cast<std::ptrdiff_t>((depth + 1) * words_),
                                        domains.end());
        bool wiped = false;
        for (Vertex nb : neighbors_[v]) {
          const std::size_t pos = position_[nb];
          if (pos <= depth) continue;
          const std::size_t off = (pos - depth - 1) * words_;
          std::uint64_t any = 0;
          auto row = adj_.row(t);
          for (std::size_t x = 0; x < words_; ++x) {
            next[off + x] &= row[x];
            any |= next[off + x];
          }
          if (any == 0) {
            wiped = true;
            break;
          }
        }
        if (!wiped) {
          std::vector<std::uint64_t> shifted(domains.size(), 0);
          std::copy(next.begin(), next.end(),
                    shifted.begin() + static_cast<std::ptrdiff_t>((depth + 1) * words_));
          if (search(depth + 1, shifted)) return true;
          if (aborted_) return false;
        }
        assignment_[v] = SIZE_MAX;
      }
    }
    return false;
  }

  const Hypergraph& g_;
  const std::vector<UniversalVertex>& targets_;
  const AdjacencyMatrix& adj_;
  std::uint64_t budget_;
  std::size_t words_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> neighbors_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> assignment_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

struct Target {
  std::vector<UniversalVertex> vertices;
  std::unique_ptr<AdjacencyMatrix> owned;
  const AdjacencyMatrix* adj = nullptr;
};

Target build_target(std::uint32_t q, const Rational& eps) {
  Target t;
  if (eps == 0) {
    if (q > 3) fail(ErrorKind::kCapExceeded, "homomorphism search into G_q is capped at q <= 3");
    if (q == 3) {
      t.vertices = g3_vertices();
      t.adj = &g3_adjacency();
      return t;
    }
    t.vertices = enumerate_vertices(q, VertexVariant::kBalanced);
  } else {
    if (q > 2) fail(ErrorKind::kCapExceeded, "homomorphism search into G_{q,eps} is capped at q = 2");
    t.vertices = enumerate_vertices(q, VertexVariant::kUnrestricted);
  }
  t.owned = std::make_unique<AdjacencyMatrix>(t.vertices, eps);
  t.adj = t.owned.get();
  return t;
}

}  // namespace

HomSearchResult hom_search(const Hypergraph& g, std::uint32_t q, const Rational& eps,
                           const SearchOptions& opts) {
  require(g.uniformity() == 2, "homomorphism search needs a graph (k = 2)");
  require(q >= 2, "alphabet size must be at least 2");
  require(eps >= 0 && eps < 1, "epsilon must satisfy 0 <= eps < 1");
  Target target = build_target(q, eps);
  HomSearcher searcher(g, target.vertices, *target.adj, opts.budget);
  return searcher.run();
}

namespace {

// Backtracking over column functions [q]^k -> [q] for k != 2.
class FunctionSearcher {
 public:
  FunctionSearcher(const Hypergraph& g, std::uint32_t q, const Rational& eps, std::uint64_t budget)
      : g_(g), q_(q), k_(g.uniformity()), budget_(budget) {
    messages_ = static_cast<std::uint32_t>(checked_pow(q, k_, 1u << 20));
    const Rational need = (1 - eps) * messages_;
    need_ = static_cast<std::uint64_t>(
        (boost::multiprecision::numerator(need) + boost::multiprecision::denominator(need) - 1) /
        boost::multiprecision::denominator(need));
    order_ = degree_order(g);
    incident_.resize(g.vertex_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      for (Vertex v : g.edge(i)) incident_[v].push_back(i);
    build_candidates();
  }

  std::pair<SearchStatus, std::optional<Code>> run() {
    columns_.assign(g_.vertex_count(), std::vector<Symbol>(messages_, 0));
    assigned_.assign(g_.vertex_count(), false);
    const bool found = order_.empty() || search(0);
    if (!found) return {aborted_ ? SearchStatus::kUnknown : SearchStatus::kAbsent, std::nullopt};
    return {SearchStatus::kFound, Code::from_columns(q_, k_, columns_)};
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Restricted growth strings: first occurrences appear in order 0, 1, ...
  void build_candidates() {
    std::vector<std::uint32_t> f(messages_, 0);
    auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t max_used) -> void {
      if (pos == messages_) {
        all_.push_back(std::vector<Symbol>(f.begin(), f.end()));
        return;
      }
      for (std::uint32_t s = 0; s <= std::min(max_used + 1, q_ - 1); ++s) {
        f[pos] = s;
        self(self, pos + 1, std::max(max_used, s));
      }
    };
    f[0] = 0;
    rec(rec, 1, 0);
    for (const auto& c : all_)
      if (std::is_sorted(c.begin(), c.end())) sorted_.push_back(c);
  }

  // Upper bound on distinct full tuples given the assigned part of the edge.
  bool edge_feasible(std::size_t edge_index) const {
    auto e = g_.edge(edge_index);
    std::vector<Vertex> done;
    for (Vertex v : e)
      if (assigned_[v]) done.push_back(v);
    if (done.empty()) return true;
    std::vector<std::uint32_t> count(checked_pow(q_, done.size(), 1u << 20), 0);
    for (std::uint32_t m = 0; m < messages_; ++m) {
      std::uint32_t key = 0;
      for (Vertex v : done) key = key * q_ + columns_[v][m];
      ++count[key];
    }
    const std::uint64_t cap = checked_pow(q_, k_ - done.size(), 1u << 20);
    std::uint64_t bound = 0;
    for (auto c : count) bound += std::min<std::uint64_t>(c, cap);
    return bound >= need_;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    const auto& candidates = depth == 0 ? sorted_ : all_;
    for (const auto& f : candidates) {
      if (nodes_ >= budget_) {
        aborted_ = true;
        return false;
      }
      ++nodes_;
      columns_[v] = f;
      assigned_[v] = true;
      bool ok = true;
      for (std::size_t e : incident_[v])
        if (!edge_feasible(e)) {
          ok = false;
          break;
        }
      if (ok && search(depth + 1)) return true;
      assigned_[v] = false;
      if (aborted_) return false;
    }
    return false;
  }

  const Hypergraph& g_;
  std::uint32_t q_;
  std::uint32_t k_;
  std::uint64_t budget_;
  std::uint32_t messages_ = 0;
  std::uint64_t need_ = 0;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<std::vector<Symbol>> all_;
  std::vector<std::vector<Symbol>> sorted_;
  std::vector<std::vector<Symbol>> columns_;
  std::vector<bool> assigned_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

Code trivial_code(std::uint32_t q, std::uint32_t k, std::uint32_t n) {
  const std::uint64_t rows = checked_pow(q, k, kMaxTableRows);
  if (rows == 0) fail(ErrorKind::kCapExceeded, "q^k exceeds the table cap");
  return Code::from_table(q, k, n, std::vector<Symbol>(rows * n, 0));
}

bool witness_ok(const Code& c, const Hypergraph& g, const Rational& eps) {
  return (eps == 0 ? verify_exact(c, g) : verify_eps(c, g, eps)).valid;
}

}  // namespace

QExactResult q_exact(const Hypergraph& g, const Rational& eps, std::uint32_t q_max,
                     const SearchOptions& opts) {
  require(eps >= 0 && eps < 1, "epsilon must satisfy 0 <= eps < 1");
  require(q_max >= 2, "q_max must be at least 2");
  QExactResult r;
  if (g.edge_count() == 0) {
    // No decoding sets: every alphabet works, and alphabets start at 2.
    r.status = SearchStatus::kFound;
    r.q = 2;
    r.witness = trivial_code(2, g.uniformity(), g.vertex_count());
    r.tried.emplace_back(2, SearchStatus::kFound);
    return r;
  }
  const std::uint32_t k = g.uniformity();
  const bool use_hom = k == 2 && !opts.function_search_for_graphs;
  if (!use_hom) {
    if (g.vertex_count() > opts.max_generic_n || k > opts.max_generic_k)
      fail(ErrorKind::kCapExceeded, "function-assignment search is capped at n <= " +
                                        std::to_string(opts.max_generic_n) + ", k <= " +
                                        std::to_string(opts.max_generic_k));
  }
  for (std::uint32_t q = 2; q <= q_max; ++q) {
    SearchStatus status;
    std::optional<Code> witness;
    if (use_hom) {
      auto hom = hom_search(g, q, eps, opts);
      r.nodes += hom.nodes;
      status = hom.status;
      if (status == SearchStatus::kFound) witness = code_from_hom(hom.map, g, eps);
    } else {
      if (q > opts.max_generic_q)
        fail(ErrorKind::kCapExceeded, "function-assignment search is capped at q <= " +
                                          std::to_string(opts.max_generic_q));
      FunctionSearcher searcher(g, q, eps, opts.budget);
      auto [st, code] = searcher.run();
      r.nodes += searcher.nodes();
      status = st;
      witness = std::move(code);
    }
    r.tried.emplace_back(q, status);
    if (status == SearchStatus::kUnknown) {
      r.status = SearchStatus::kUnknown;
      return r;
    }
    if (status == SearchStatus::kFound) {
      if (!witness_ok(*witness, g, eps))
        fail(ErrorKind::kInvalid, "search produced a witness that fails verification");
      r.status = SearchStatus::kFound;
      r.q = q;
      r.witness = std::move(witness);
      return r;
    }
  }
  r.status = SearchStatus::kAbsent;
  return r;
}

}  // namespace epc
