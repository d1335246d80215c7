#include "oddcover/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <random>

#include "oddcover/error.hpp"

namespace oddcover {

Graph::Graph(int n) : n_(n), adj_(n < 0 ? 0 : static_cast<std::size_t>(n), n < 0 ? 0 : static_cast<std::size_t>(n)) {
  if (n < 0) throw InvalidArgument("Graph: negative vertex count");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_adjacency(Gf2Matrix adj) {
  if (adj.rows() != adj.cols()) throw InvalidArgument("Graph: adjacency matrix is not square");
  if (!adj.is_symmetric_zero_diag()) throw InvalidArgument("Graph: adjacency matrix must be symmetric with zero diagonal");
  Graph g;
  g.n_ = static_cast<int>(adj.rows());
  g.adj_ = std::move(adj);
  return g;
}

std::size_t Graph::index(Vertex v) const {
  if (v < 1 || v > n_) throw InvalidArgument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n_));
  return static_cast<std::size_t>(v - 1);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < adj_.rows(); ++i) total += kernels::popcount(adj_.row(i));
  return total / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("Graph: loop at vertex " + std::to_string(u));
  adj_.set(index(u), index(v));
  adj_.set(index(v), index(u));
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adj_.set(index(u), index(v), false);
  adj_.set(index(v), index(u), false);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
  if (u == v) throw InvalidArgument("Graph: loop at vertex " + std::to_string(u));
  adj_.flip(index(u), index(v));
  adj_.flip(index(v), index(u));
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  for (std::size_t i : adj_.row_vector(index(v)).support()) out.push_back(static_cast<Vertex>(i + 1));
  return out;
}

int Graph::degree(Vertex v) const { return static_cast<int>(kernels::popcount(adj_.row(index(v)))); }

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_bipartition(std::vector<Side> sides) {
  if (sides.size() != static_cast<std::size_t>(n_)) throw InvalidArgument("bipartition: one label per vertex required");
  for (auto [u, v] : edges()) {
    if (sides[static_cast<std::size_t>(u - 1)] == sides[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("bipartition: edge " + std::to_string(u) + "-" + std::to_string(v) + " lies within one side");
    }
  }
  sides_ = std::move(sides);
}

Graph Graph::induced(VertexSet keep) const {
  std::ranges::sort(keep);
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  Graph out(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (adjacent(keep[i], keep[j])) out.add_edge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    }
  }
  if (sides_) {
    std::vector<Side> sides;
    for (Vertex v : keep) sides.push_back((*sides_)[static_cast<std::size_t>(v - 1)]);
    out.sides_ = std::move(sides);
  }
  return out;
}

std::size_t two_rank(const Graph& g) { return rank(g.adjacency()); }

// --- generators -----------------------------------------------------------

Graph empty_graph(int n) {
  if (n < 0) throw InvalidArgument("empty_graph: n must be >= 0");
  return Graph(n);
}

Graph complete(int n) {
  if (n < 1) throw InvalidArgument("complete: n must be >= 1");
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw InvalidArgument("cycle: n must be >= 3");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  g.add_edge(n, 1);
  return g;
}

Graph path(int n) {
  if (n < 1) throw InvalidArgument("path: n must be >= 1");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star(int leaves) {
  if (leaves < 1) throw InvalidArgument("star: at least one leaf required");
  Graph g(leaves + 1);
  for (Vertex v = 2; v <= leaves + 1; ++v) g.add_edge(1, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw InvalidArgument("complete_bipartite: both sides must be nonempty");
  Graph g(a + b);
  std::vector<Side> sides(static_cast<std::size_t>(a + b), Side::B);
  for (Vertex u = 1; u <= a; ++u) {
    sides[static_cast<std::size_t>(u - 1)] = Side::A;
    for (Vertex v = a + 1; v <= a + b; ++v) g.add_edge(u, v);
  }
  g.set_bipartition(std::move(sides));
  return g;
}

Graph k_triangles(int k) {
  if (k < 1) throw InvalidArgument("k_triangles: k must be >= 1");
  Graph g(3 * k);
  for (int t = 0; t < k; ++t) {
    const Vertex base = 3 * t;
    g.add_edge(base + 1, base + 2);
    g.add_edge(base + 2, base + 3);
    g.add_edge(base + 1, base + 3);
  }
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order();
  Graph out(n + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges()) out.add_edge(u + n, v + n);
  return out;
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
  if (n < 0) throw InvalidArgument("random_graph: n must be >= 0");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(edge_probability);
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

std::size_t checked_power(int base, int k, const GeneratorLimits& limits, const char* who) {
  if (k < 1) throw InvalidArgument(std::string(who) + ": k must be >= 1");
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= static_cast<std::size_t>(base);
    if (n > limits.vertex_budget) {
      throw InvalidArgument(std::string(who) + ": vertex count exceeds budget of " + std::to_string(limits.vertex_budget));
    }
  }
  return n;
}

// Digits of `index` in base `base`, most significant first.
std::vector<int> digits(std::size_t index, int base, int k) {
  std::vector<int> out(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(base));
    index /= static_cast<std::size_t>(base);
  }
  return out;
}

}  // namespace

Graph graph_bk(int k, const GeneratorLimits& limits) {
  const std::size_t n = checked_power(3, k, limits, "graph_bk");
  // Per-word masks of the coordinates holding 0 and holding 1.
  std::vector<std::uint64_t> zeros(n), ones(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto d = digits(i, 3, k);
    for (int c = 0; c < k; ++c) {
      if (d[static_cast<std::size_t>(c)] == 0) zeros[i] |= std::uint64_t{1} << c;
      if (d[static_cast<std::size_t>(c)] == 1) ones[i] |= std::uint64_t{1} << c;
    }
  }
  Gf2Matrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto opposed = (zeros[i] & ones[j]) | (ones[i] & zeros[j]);
      if (std::popcount(opposed) & 1) {
        adj.set(i, j);
        adj.set(j, i);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph graph_tk(int k, const GeneratorLimits& limits) {
  const std::size_t n = checked_power(4, k, limits, "graph_tk");
  std::vector<std::vector<int>> words(n);
  for (std::size_t i = 0; i < n; ++i) words[i] = digits(i, 4, k);
  Gf2Matrix adj(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int differing = 0;
      for (std::size_t c = 0; c < static_cast<std::size_t>(k); ++c) {
        const int a = words[i][c];
        const int b = words[j][c];
        if (a != 3 && b != 3 && a != b) ++differing;
      }
      if (differing & 1) {
        adj.set(i, j);
        adj.set(j, i);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string bk_label(int k, std::size_t index) {
  std::string out;
  for (int d : digits(index, 3, k)) out.push_back("01e"[d]);
  return out;
}

std::string tk_label(int k, std::size_t index) {
  std::string out;
  for (int d : digits(index, 4, k)) out.push_back("012e"[d]);
  return out;
}

// --- twins ----------------------------------------------------------------

namespace {

std::vector<VertexSet> classes_by_row(const Graph& g, bool closed) {
  std::map<std::vector<Word>, std::size_t> seen;
  std::vector<VertexSet> classes;
  for (Vertex v = 1; v <= g.order(); ++v) {
    Gf2Vector row = g.neighborhood(v);
    if (closed) row.set(static_cast<std::size_t>(v - 1));
    std::vector<Word> key(row.words().begin(), row.words().end());
    auto [it, inserted] = seen.try_emplace(std::move(key), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

}  // namespace

TwinClasses twin_classes(const Graph& g) { return {classes_by_row(g, false), classes_by_row(g, true)}; }

TwinReduction reduce_twins(const Graph& g) {
  const auto classes = classes_by_row(g, false);
  TwinReduction out;
  out.map.assign(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    out.representatives.push_back(classes[c].front());
    for (Vertex v : classes[c]) out.map[static_cast<std::size_t>(v - 1)] = static_cast<Vertex>(c + 1);
  }
  out.graph = g.induced(out.representatives);
  return out;
}

std::optional<AdjacentTwinMatching> adjacent_twin_matching(const Graph& g) {
  AdjacentTwinMatching m;
  for (const VertexSet& cls : classes_by_row(g, true)) {
    if (cls.size() % 2 != 0) return std::nullopt;
    for (std::size_t i = 0; i < cls.size(); i += 2) m.pairs.emplace_back(cls[i], cls[i + 1]);
  }
  return m;
}

void check_adjacent_twin_matching(const Graph& g, const AdjacentTwinMatching& m) {
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  for (auto [u, v] : m.pairs) {
    if (u < 1 || v < 1 || u > g.order() || v > g.order() || u == v) {
      throw InvalidArgument("adjacent-twin matching: invalid pair");
    }
    for (Vertex w : {u, v}) {
      if (used[static_cast<std::size_t>(w - 1)]) throw InvalidArgument("adjacent-twin matching: vertex " + std::to_string(w) + " used twice");
      used[static_cast<std::size_t>(w - 1)] = true;
    }
    if (!g.adjacent(u, v)) throw InvalidArgument("adjacent-twin matching: pair is not an edge");
    Gf2Vector nu = g.neighborhood(u);
    Gf2Vector nv = g.neighborhood(v);
    nu.set(static_cast<std::size_t>(u - 1));
    nv.set(static_cast<std::size_t>(v - 1));
    if (!(nu == nv)) throw InvalidArgument("adjacent-twin matching: " + std::to_string(u) + "," + std::to_string(v) + " are not adjacent twins");
  }
  if (std::ranges::find(used, false) != used.end()) throw InvalidArgument("adjacent-twin matching: not perfect");
}

// --- recognisers ----------------------------------------------------------

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s - 1)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<Vertex> q;
    q.push(s);
    comp[static_cast<std::size_t>(s - 1)] = id;
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      out.back().push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(w - 1)] < 0) {
          comp[static_cast<std::size_t>(w - 1)] = id;
          q.push(w);
        }
      }
    }
    std::ranges::sort(out.back());
  }
  return out;
}

bool is_forest(const Graph& g) {
  return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

std::optional<std::vector<Side>> find_bipartition(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (colour[static_cast<std::size_t>(s - 1)] >= 0) continue;
    colour[static_cast<std::size_t>(s - 1)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      const int cu = colour[static_cast<std::size_t>(u - 1)];
      for (Vertex w : g.neighbors(u)) {
        int& cw = colour[static_cast<std::size_t>(w - 1)];
        if (cw < 0) {
          cw = 1 - cu;
          q.push(w);
        } else if (cw == cu) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<Side> sides;
  for (int c : colour) sides.push_back(c == 0 ? Side::A : Side::B);
  return sides;
}

std::optional<VertexSet> cycle_order(const Graph& g) {
  const int n = g.order();
  if (n < 3) return std::nullopt;
  for (Vertex v = 1; v <= n; ++v) {
    if (g.degree(v) != 2) return std::nullopt;
  }
  VertexSet order{1};
  Vertex prev = 1;
  Vertex cur = g.neighbors(1).front();
  while (cur != 1) {
    order.push_back(cur);
    const VertexSet nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

}  // namespace oddcover
