#pragma once

// Independent oracles and fixtures shared by the test binaries. Nothing here
// calls into the library's linear algebra.

#include <algorithm>
#include <fstream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "oddcover/graph.hpp"
#include "oddcover/graph_io.hpp"

namespace testing {

using Dense = std::vector<std::vector<int>>;

inline Dense dense(const oddcover::Graph& g) {
  const int n = g.order();
  Dense a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) a[u - 1][v - 1] = g.adjacent(u, v) ? 1 : 0;
  }
  return a;
}

// Plain row reduction on ints mod 2.
inline std::size_t naive_rank(Dense a) {
  std::size_t r = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r && a[i][c]) {
        for (std::size_t j = 0; j < cols; ++j) a[i][j] ^= a[r][j];
      }
    }
    ++r;
  }
  return r;
}

inline oddcover::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  oddcover::Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline oddcover::Graph random_bipartite(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<int> side(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) side[v] = coin(rng) ? 1 : 0;
  oddcover::Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (side[u] != side[v] && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

// Random labelled forest: each vertex joins an earlier one with probability p.
inline oddcover::Graph random_forest(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i + 1;
  std::shuffle(perm.begin(), perm.end(), rng);
  oddcover::Graph g(n);
  for (int i = 1; i < n; ++i) {
    if (!coin(rng)) continue;
    std::uniform_int_distribution<int> pick(0, i - 1);
    g.add_edge(perm[i], perm[pick(rng)]);
  }
  return g;
}

// Maximum matching of a forest by repeatedly matching a leaf to its parent.
inline std::size_t forest_matching(const oddcover::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (auto [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> deg(static_cast<std::size_t>(n) + 1);
  std::vector<bool> gone(static_cast<std::size_t>(n) + 1, false);
  for (int v = 1; v <= n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::size_t matched = 0;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v = 1; v <= n; ++v) {
      if (gone[v] || deg[v] != 1) continue;
      int parent = 0;
      for (int w : adj[v]) {
        if (!gone[w]) parent = w;
      }
      ++matched;
      for (int x : {v, parent}) {
        gone[x] = true;
        for (int w : adj[x]) {
          if (!gone[w]) --deg[w];
        }
      }
      progress = true;
    }
  }
  return matched;
}

inline std::vector<oddcover::Graph> small_graphs() {
  std::ifstream f(std::string(ODDCOVER_TEST_DATA) + "/graphs_le6.g6");
  std::vector<oddcover::Graph> out;
  for (std::string line; std::getline(f, line);) {
    if (!line.empty()) out.push_back(oddcover::parse_graph6(line));
  }
  return out;
}

}  // namespace testing
