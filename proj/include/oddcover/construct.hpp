#pragma once

// Explicit odd covers for the graph families with known upper bounds. Every
// function verifies its output against the input graph before returning and
// throws ConstructionFailure if that check fails.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oddcover/cover.hpp"
#include "oddcover/graph.hpp"

namespace oddcover {

enum class Family { Forest, Bipartite, OddCycle, Complete, AdjacentTwin, Rank, Star, Triangles };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct ConstructionResult {
  OddCover cover;
  Family family;
  // Size formula as a tag ("m(F)", "r2/2", "(n+1)/2", ...) and its value on
  // this instance. For the exact families the cover size equals the value;
  // for the bound-only families (adjacent-twin, rank, star) it is at most it.
  std::string formula;
  std::size_t formula_value = 0;

  std::size_t size() const noexcept { return cover.size(); }
};

// Star partition with one star per vertex of a minimum vertex cover.
// Throws InvalidArgument on graphs with a cycle.
ConstructionResult forest_cover(const Graph& forest);

// r2/2 bicliques, each with X on side A and Y on side B. Uses the graph's
// bipartition if present, otherwise computes one; throws on odd cycles.
ConstructionResult bipartite_cover(const Graph& g);

// (n-1)/2 two-leaf stars centred at 2, 4, ..., n-1 plus the edge {n, 1}.
ConstructionResult odd_cycle_cover(int n);

// n/2 + 1 bicliques from a perfect matching into adjacent twins.
ConstructionResult adjacent_twin_cover(const Graph& g, const AdjacentTwinMatching& m);

// The 4k words a^(1..4k) over {0,1,e}^{4k} whose complements complete an
// odd cover of K_{8k} with 4k bicliques. Vertex 2i-1 takes a^(i), vertex 2i
// its complement.
std::vector<CodeWord> complete_8k_words(int k);
CodeWord complement(const CodeWord& w);

ConstructionResult complete_cover(int n);

// Symplectic decomposition into r2/2 tricliques, each split into two bicliques.
ConstructionResult rank_cover(const Graph& g);

// Stars centred outside a greedy independent set (lowest degree first).
ConstructionResult star_cover(const Graph& g);

inline constexpr int kMaxTrianglesForSearch = 3;

// k+1 bicliques for kK3; k = 2 uses a fixed pattern, other k run the exact
// solver. Throws InvalidArgument when k exceeds `max_k`.
ConstructionResult k_triangles_cover(int k, int max_k = kMaxTrianglesForSearch);

// --- dispatch on arbitrary labelled graphs --------------------------------

bool applicable(const Graph& g, Family f);
// Applies `f` to g, relabelling through the recognised structure when the
// family is defined on a canonical labelling (cycles, cliques, triangles).
ConstructionResult construct(const Graph& g, Family f);

// Order: forest, bipartite, odd cycle, complete, adjacent twin, rank, star.
inline constexpr Family kAutoOrder[] = {Family::Forest,       Family::Bipartite, Family::OddCycle, Family::Complete,
                                        Family::AdjacentTwin, Family::Rank,      Family::Star};

// First applicable family, or the smallest cover over all of them when `best`.
ConstructionResult construct_auto(const Graph& g, bool best = false);

}  // namespace oddcover
