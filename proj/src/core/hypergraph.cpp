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

#include "hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "combinatorics.hpp"
#include "error.hpp"
#include "galois.hpp"
#include "rational.hpp"
#include "text.hpp"

namespace epc {

namespace {

bool edge_less(std::span<const Vertex> a, std::span<const Vertex> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Hypergraph::Hypergraph(std::uint32_t n, std::uint32_t k, std::vector<std::vector<Vertex>> edges) {
  std::vector<Vertex> flat;
  flat.reserve(edges.size() * k);
  for (const auto& e : edges) {
    if (e.size() != k)
      fail(ErrorKind::kArgument, "edge has " + std::to_string(e.size()) + " vertices, expected " +
                                     std::to_string(k));
    flat.insert(flat.end(), e.begin(), e.end());
  }
  *this = from_flat(n, k, std::move(flat));
}

Hypergraph Hypergraph::from_flat(std::uint32_t n, std::uint32_t k, std::vector<Vertex> flat) {
  require(k >= 1, "uniformity must be at least 1");
  require(flat.size() % k == 0, "flat edge array not a multiple of k");
  const std::size_t m = flat.size() / k;
  for (std::size_t i = 0; i < m; ++i) {
    auto first = flat.begin() + static_cast<std::ptrdiff_t>(i * k);
    std::sort(first, first + k);
    for (std::uint32_t j = 0; j < k; ++j) {
      if (first[j] >= n)
        fail(ErrorKind::kArgument, "vertex " + std::to_string(first[j] + 1) + " out of range [1, " +
                                       std::to_string(n) + "]");
      if (j > 0 && first[j] == first[j - 1])
        fail(ErrorKind::kArgument, "edge repeats vertex " + std::to_string(first[j] + 1));
    }
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto span_of = [&](std::size_t i) { return std::span<const Vertex>(flat).subspan(i * k, k); };
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return edge_less(span_of(a), span_of(b)); });
  Hypergraph g;
  g.n_ = n;
  g.k_ = k;
  g.flat_.reserve(flat.size());
  for (std::size_t idx = 0; idx < m; ++idx) {
    auto e = span_of(order[idx]);
    if (idx > 0 && std::equal(e.begin(), e.end(), span_of(order[idx - 1]).begin())) continue;
    g.flat_.insert(g.flat_.end(), e.begin(), e.end());
  }
  return g;
}

bool Hypergraph::contains(std::span<const Vertex> e) const {
  if (e.size() != k_) return false;
  std::vector<Vertex> key(e.begin(), e.end());
  std::sort(key.begin(), key.end());
  std::size_t lo = 0, hi = edge_count();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (edge_less(edge(mid), key))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo < edge_count() && std::equal(key.begin(), key.end(), edge(lo).begin());
}

std::vector<bool> Hypergraph::isolated() const {
  std::vector<bool> iso(n_, true);
  for (Vertex v : flat_) iso[v] = false;
  return iso;
}

Hypergraph complete(std::uint32_t n, std::uint32_t k) {
  require(k >= 2 && k <= n, "complete hypergraph needs 2 <= k <= n");
  if (binomial(n, k) > kMaxEdges)
    fail(ErrorKind::kCapExceeded, "complete:" + std::to_string(n) + ":" + std::to_string(k) +
                                      " has too many edges");
  std::vector<Vertex> flat;
  for_each_combination(n, k, [&](std::span<const std::uint32_t> c) {
    flat.insert(flat.end(), c.begin(), c.end());
    return true;
  });
  return Hypergraph::from_flat(n, k, std::move(flat));
}

Hypergraph cycle(std::uint32_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  std::vector<Vertex> flat;
  for (Vertex v = 0; v < n; ++v) {
    flat.push_back(v);
    flat.push_back((v + 1) % n);
  }
  return Hypergraph::from_flat(n, 2, std::move(flat));
}

const std::vector<std::vector<std::uint32_t>>& fano_generator_rows() {
  static const std::vector<std::vector<std::uint32_t>> rows = {
      {0, 0, 0, 1, 1, 1, 1},
      {0, 1, 1, 1, 0, 0, 1},
      {1, 1, 0, 1, 1, 0, 0},
  };
  return rows;
}

Hypergraph fano_complement() {
  const auto& rows = fano_generator_rows();
  auto column = [&](Vertex v) { return (rows[0][v] << 2) | (rows[1][v] << 1) | rows[2][v]; };
  std::vector<Vertex> flat;
  for_each_combination(7, 3, [&](std::span<const std::uint32_t> c) {
    // Distinct nonzero binary columns are dependent iff they XOR to zero.
    if ((column(c[0]) ^ column(c[1]) ^ column(c[2])) != 0) flat.insert(flat.end(), c.begin(), c.end());
    return true;
  });
  return Hypergraph::from_flat(7, 3, std::move(flat));
}

std::vector<std::vector<std::uint32_t>> normalized_vectors(const GaloisField& f, std::uint32_t k) {
  require(k >= 1, "dimension must be positive");
  const std::uint32_t q = f.order();
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> x(k, 0);
  while (next_tuple(x, q)) {
    auto lead = std::find_if(x.begin(), x.end(), [](std::uint32_t v) { return v != 0; });
    if (*lead == 1) out.push_back(x);
  }
  return out;
}

Hypergraph pg_hypergraph(const GaloisField& f, std::uint32_t k, std::uint32_t max_vertices) {
  require(k >= 2, "pg hypergraph needs k >= 2");
  const std::uint64_t q = f.order();
  std::uint64_t n = 0, pw = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    n += pw;
    pw *= q;
    if (n > max_vertices)
      fail(ErrorKind::kCapExceeded, "pg hypergraph over GF(" + std::to_string(q) +
                                        ") with k=" + std::to_string(k) + " exceeds " +
                                        std::to_string(max_vertices) + " vertices");
  }
  if (binomial(static_cast<unsigned>(n), k) > kMaxEdges)
    fail(ErrorKind::kCapExceeded, "pg hypergraph has too many candidate edges");
  const auto vecs = normalized_vectors(f, k);
  std::vector<Vertex> flat;
  std::vector<GaloisField::Element> m(static_cast<std::size_t>(k) * k);
  for_each_combination(static_cast<std::uint32_t>(vecs.size()), k, [&](std::span<const std::uint32_t> c) {
    for (std::uint32_t r = 0; r < k; ++r)
      for (std::uint32_t j = 0; j < k; ++j) m[r * k + j] = vecs[c[r]][j];
    if (f.rank(m, k, k) == k) flat.insert(flat.end(), c.begin(), c.end());
    return true;
  });
  return Hypergraph::from_flat(static_cast<std::uint32_t>(vecs.size()), k, std::move(flat));
}

namespace {

// Sorted adjacency lists of the 2-section.
std::vector<std::vector<Vertex>> section_adjacency(const Hypergraph& g) {
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        adj[e[a]].push_back(e[b]);
        adj[e[b]].push_back(e[a]);
      }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

}  // namespace

Hypergraph two_section(const Hypergraph& g) {
  const auto adj = section_adjacency(g);
  std::vector<Vertex> flat;
  for (Vertex u = 0; u < adj.size(); ++u)
    for (Vertex v : adj[u])
      if (u < v) {
        flat.push_back(u);
        flat.push_back(v);
      }
  return Hypergraph::from_flat(g.vertex_count(), 2, std::move(flat));
}

bool validate_coloring(const Hypergraph& g, const Coloring& c) {
  if (c.colors.size() != g.vertex_count()) return false;
  for (auto color : c.colors)
    if (color >= c.num_colors) return false;
  std::vector<std::uint32_t> seen;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    seen.clear();
    for (Vertex v : e) seen.push_back(c.colors[v]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

namespace {

class ColoringSolver {
 public:
  explicit ColoringSolver(const Hypergraph& g) : adj_(section_adjacency(g)), n_(g.vertex_count()) {}

  // Descending degree, ties by id.
  std::vector<Vertex> degree_order() const {
    std::vector<Vertex> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return adj_[a].size() > adj_[b].size(); });
    return order;
  }

  Coloring greedy() const {
    Coloring c;
    c.colors.assign(n_, 0);
    std::vector<bool> done(n_, false);
    std::vector<std::uint32_t> mark(n_ + 1, UINT32_MAX);
    for (Vertex v : degree_order()) {
      for (Vertex w : adj_[v])
        if (done[w]) mark[c.colors[w]] = v;
      std::uint32_t color = 0;
      while (mark[color] == v) ++color;
      c.colors[v] = color;
      c.num_colors = std::max(c.num_colors, color + 1);
      done[v] = true;
    }
    return c;
  }

  bool adjacent(Vertex a, Vertex b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }

  std::uint32_t clique_bound() const {
    if (n_ == 0) return 0;
    const auto order = degree_order();
    auto grow = [&](Vertex start) {
      std::vector<Vertex> clique{start};
      for (Vertex v : order) {
        if (v == start) continue;
        if (std::all_of(clique.begin(), clique.end(), [&](Vertex u) { return adjacent(u, v); }))
          clique.push_back(v);
      }
      return static_cast<std::uint32_t>(clique.size());
    };
    std::uint32_t best = grow(order.front());
    if (n_ <= 256)
      for (Vertex v : order) best = std::max(best, grow(v));
    return best;
  }

  ChromaticResult exact(std::uint64_t budget) {
    ChromaticResult r;
    best_ = greedy();
    r.lower_bound = clique_bound();
    ub_ = best_.num_colors;
    lb_ = r.lower_bound;
    budget_ = budget;
    active_.clear();
    for (Vertex v = 0; v < n_; ++v)
      if (!adj_[v].empty()) active_.push_back(v);
    if (ub_ > lb_ && !active_.empty()) {
      color_.assign(n_, kUncolored);
      counts_.assign(static_cast<std::size_t>(n_) * ub_, 0);
      sat_.assign(n_, 0);
      search(0, 0);
    }
    r.coloring = best_;
    r.nodes = nodes_;
    if (!aborted_ || best_.num_colors == lb_) {
      r.status = SolveStatus::kExact;
      r.lower_bound = best_.num_colors;
    }
    return r;
  }

 private:
  static constexpr std::uint32_t kUncolored = UINT32_MAX;

  void assign(Vertex v, std::uint32_t c) {
    color_[v] = c;
    for (Vertex w : adj_[v])
      if (counts_[w * ub_cap() + c]++ == 0) ++sat_[w];
  }

  void unassign(Vertex v) {
    const std::uint32_t c = color_[v];
    color_[v] = kUncolored;
    for (Vertex w : adj_[v])
      if (--counts_[w * ub_cap() + c] == 0) --sat_[w];
  }

  std::size_t ub_cap() const { return counts_.size() / n_; }

  Vertex pick() const {
    Vertex best = kUncolored;
    for (Vertex v : active_) {
      if (color_[v] != kUncolored) continue;
      if (best == kUncolored || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] && adj_[v].size() > adj_[best].size()))
        best = v;
    }
    return best;
  }

  // Returns true when the search should stop (budget or optimal found).
  bool search(std::size_t colored, std::uint32_t used) {
    if (nodes_ >= budget_) {
      aborted_ = true;
      return true;
    }
    ++nodes_;
    if (used >= ub_) return false;
    if (colored == active_.size()) {
      best_.colors.assign(n_, 0);
      for (Vertex v : active_) best_.colors[v] = color_[v];
      best_.num_colors = std::max<std::uint32_t>(used, 1);
      ub_ = best_.num_colors;
      return ub_ <= lb_;
    }
    const Vertex v = pick();
    for (std::uint32_t c = 0; c < used; ++c) {
      if (counts_[v * ub_cap() + c] != 0) continue;
      assign(v, c);
      const bool stop = search(colored + 1, used);
      unassign(v);
      if (stop) return true;
    }
    if (used + 1 < ub_) {
      assign(v, used);
      const bool stop = search(colored + 1, used + 1);
      unassign(v);
      if (stop) return true;
    }
    return false;
  }

  std::vector<std::vector<Vertex>> adj_;
  std::uint32_t n_;
  std::vector<Vertex> active_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> sat_;
  Coloring best_;
  std::uint32_t ub_ = 0;
  std::uint32_t lb_ = 0;
  std::uint64_t budget_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

ChromaticResult strong_chromatic(const Hypergraph& g, ChromaticMode mode, std::uint64_t budget) {
  ColoringSolver solver(g);
  if (mode == ChromaticMode::kExact) return solver.exact(budget);
  ChromaticResult r;
  r.coloring = solver.greedy();
  r.lower_bound = solver.clique_bound();
  if (g.vertex_count() > 0) r.coloring.num_colors = std::max<std::uint32_t>(r.coloring.num_colors, 1);
  r.status = r.lower_bound == r.coloring.num_colors ? SolveStatus::kExact : SolveStatus::kBoundOnly;
  return r;
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = text::tokenize(text);
  if (lines.empty()) fail(ErrorKind::kParse, "line 1: missing '<n> <k>' header");
  const auto& head = lines.front();
  if (head.tokens.size() != 2) text::parse_error(head.number, "header must be '<n> <k>'");
  const auto n = text::parse_uint(head.tokens[0], head.number);
  const auto k = text::parse_uint(head.tokens[1], head.number);
  if (k < 1) text::parse_error(head.number, "k must be at least 1");
  if (n > UINT32_MAX / 2) text::parse_error(head.number, "n too large");
  std::vector<Vertex> flat;
  std::set<std::vector<Vertex>> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.size() != k)
      text::parse_error(line.number, "edge has " + std::to_string(line.tokens.size()) +
                                         " vertices, expected " + std::to_string(k));
    std::vector<Vertex> e;
    for (auto tok : line.tokens) {
      const auto v = text::parse_uint(tok, line.number);
      if (v < 1 || v > n)
        text::parse_error(line.number, "vertex " + std::string(tok) + " out of range [1, " +
                                           std::to_string(n) + "]");
      e.push_back(static_cast<Vertex>(v - 1));
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      text::parse_error(line.number, "edge repeats a vertex");
    if (!seen.insert(e).second) text::parse_error(line.number, "duplicate edge");
    flat.insert(flat.end(), e.begin(), e.end());
  }
  return Hypergraph::from_flat(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
                               std::move(flat));
}

std::string format_hypergraph(const Hypergraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.uniformity() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    auto e = g.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j] + 1;
    out << '\n';
  }
  return out.str();
}

namespace {

std::uint32_t shorthand_arg(std::string_view tok, const std::string& spec) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v > 1'000'000)
    fail(ErrorKind::kArgument, "bad number '" + std::string(tok) + "' in '" + spec + "'");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

Hypergraph load_hypergraph(const std::string& spec) {
  if (spec == "fano-complement") return fano_complement();
  const auto parts = text::split(spec, ':');
  if (parts[0] == "complete" && parts.size() == 3)
    return complete(shorthand_arg(parts[1], spec), shorthand_arg(parts[2], spec));
  if (parts[0] == "cycle" && parts.size() == 2) return cycle(shorthand_arg(parts[1], spec));
  if (parts[0] == "pg" && parts.size() == 3) {
    GaloisField f(shorthand_arg(parts[1], spec));
    return pg_hypergraph(f, shorthand_arg(parts[2], spec));
  }
  return parse_hypergraph(text::read_file(spec));
}

}  // namespace epc
