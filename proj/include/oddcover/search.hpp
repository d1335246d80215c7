#pragma once

// Exact b2(G) for small graphs. A twin-free graph has an odd cover of size k
// iff it is an induced subgraph of B_k, so level k of the search looks for an
// assignment of distinct words in {0,1,e}^k to the vertices whose pairwise
// parity rule reproduces the adjacency. Levels run upward from just below
// the lower bound; the first feasible level is b2 and the level beneath it
// is the exhaustion certificate.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "oddcover/construct.hpp"
#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

// Largest word length the solver will tabulate (3^9 x 3^9 bits of B_k adjacency).
inline constexpr int kMaxSearchK = 9;

struct SearchConfig {
  int max_k = 8;
  std::chrono::duration<double> time_budget = std::chrono::hours(1);
  std::uint64_t node_budget = std::uint64_t{1} << 40;
  // Same witness and node count for every thread count.
  bool deterministic = true;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
  // Collapse open twins before searching; words are then required to be distinct.
  bool reduce_twins = true;
  // Stop below the best constructed cover and return that cover as the witness.
  bool use_upper_bound = true;
};

enum class SearchStatus { Exact, LowerBoundOnly, BudgetExhausted };

std::string_view to_string(SearchStatus s);

struct LevelStats {
  int k = 0;
  std::uint64_t nodes = 0;
  bool feasible = false;
};

struct SearchResult {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::optional<std::size_t> b2;
  std::optional<OddCover> witness;
  std::size_t lb = 0;  // best proven lower bound
  std::optional<std::size_t> ub;  // size of the best constructed cover, if computed
  std::uint64_t nodes = 0;
  std::chrono::milliseconds elapsed{0};
  // Level searched to exhaustion just below b2, when b2 > 0.
  std::optional<int> certificate_k;
  std::vector<LevelStats> levels;
};

// max(ceil(r2/2), (n+1)/2 for odd cliques, least l with 3^l >= |twin-reduced G|).
std::size_t lower_bound(const Graph& g);

struct UpperBound {
  std::size_t value = 0;
  OddCover cover;
  Family family = Family::Star;
};

// Smallest verified cover over all applicable constructions.
UpperBound upper_bound(const Graph& g);

SearchResult exact_b2(const Graph& g, const SearchConfig& cfg = {});

// One level of the search: a cover of g with exactly k bicliques, each with
// both sides nonempty and no two equal, or nullopt once the level is exhausted.
// Throws std::runtime_error if the budget runs out first.
std::optional<OddCover> search_level(const Graph& g, int k, const SearchConfig& cfg = {});

}  // namespace oddcover
