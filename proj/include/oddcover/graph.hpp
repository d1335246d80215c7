#pragma once

// Simple undirected graphs on vertices 1..n backed by a packed adjacency
// matrix. Vertex arguments and results are 1-based throughout; the
// adjacency matrix itself is indexed from 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oddcover/gf2.hpp"

namespace oddcover {

using Vertex = int;
using VertexSet = std::vector<Vertex>;

enum class Side : std::uint8_t { A, B };

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);
  // Throws unless `adj` is square, symmetric and has zero diagonal.
  static Graph from_adjacency(Gf2Matrix adj);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const;

  bool adjacent(Vertex u, Vertex v) const { return adj_.get(index(u), index(v)); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  void toggle_edge(Vertex u, Vertex v);

  VertexSet neighbors(Vertex v) const;
  int degree(Vertex v) const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  const Gf2Matrix& adjacency() const noexcept { return adj_; }
  // Row of the adjacency matrix for v.
  Gf2Vector neighborhood(Vertex v) const { return adj_.row_vector(index(v)); }

  const std::optional<std::vector<Side>>& bipartition() const noexcept { return sides_; }
  // Throws if some edge stays within one side.
  void set_bipartition(std::vector<Side> sides);

  // Induced subgraph on `keep` (any order; relabelled 1..|keep| in ascending order).
  Graph induced(VertexSet keep) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t index(Vertex v) const;

  int n_ = 0;
  Gf2Matrix adj_;
  std::optional<std::vector<Side>> sides_;
};

// r2(G): rank of A(G) over F2.
std::size_t two_rank(const Graph& g);

// --- generators -----------------------------------------------------------

struct GeneratorLimits {
  std::size_t vertex_budget = std::size_t{1} << 16;
};

Graph empty_graph(int n);
Graph complete(int n);
// 1-2-...-n-1; requires n >= 3.
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
Graph complete_bipartite(int a, int b);
// k disjoint triangles {1,2,3}, {4,5,6}, ...
Graph k_triangles(int k);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

// Strings over {0,1,e}^k; u ~ v iff the number of places where one holds 0
// and the other 1 is odd. Vertex i+1 is the base-3 expansion of i, most
// significant digit first, digits 0,1,2 meaning 0,1,e.
Graph graph_bk(int k, const GeneratorLimits& limits = {});
// Strings over {0,1,2,e}^k; u ~ v iff the number of places where they differ
// and neither is e is odd. Digits 0..3 mean 0,1,2,e.
Graph graph_tk(int k, const GeneratorLimits& limits = {});
std::string bk_label(int k, std::size_t index);
std::string tk_label(int k, std::size_t index);

// --- twins ----------------------------------------------------------------

struct TwinClasses {
  // Classes ordered by least member; members ascending.
  std::vector<VertexSet> open_classes;    // by N(v)
  std::vector<VertexSet> closed_classes;  // by N[v]
};

TwinClasses twin_classes(const Graph& g);

struct TwinReduction {
  Graph graph;
  // map[v-1] is the vertex of `graph` that old vertex v collapses onto.
  std::vector<Vertex> map;
  // representatives[w-1] is the old vertex kept for new vertex w.
  std::vector<Vertex> representatives;
};

// Keeps the least member of every open twin class.
TwinReduction reduce_twins(const Graph& g);

struct AdjacentTwinMatching {
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

// A perfect matching of g into adjacent twins (N[u] = N[v]), pairing
// consecutive members of each closed twin class; nullopt if some class is odd.
std::optional<AdjacentTwinMatching> adjacent_twin_matching(const Graph& g);

// Throws InvalidArgument unless `m` is a perfect matching of g into adjacent twins.
void check_adjacent_twin_matching(const Graph& g, const AdjacentTwinMatching& m);

// --- recognisers ----------------------------------------------------------

bool is_complete(const Graph& g);
bool is_forest(const Graph& g);
// Two-colouring with the least vertex of each component on side A.
std::optional<std::vector<Side>> find_bipartition(const Graph& g);
// For a connected 2-regular graph, the cyclic order starting 1, then its
// smaller neighbour. nullopt otherwise.
std::optional<VertexSet> cycle_order(const Graph& g);
std::vector<VertexSet> connected_components(const Graph& g);

}  // namespace oddcover
