#include <doctest.h>

#include <algorithm>
#include <random>

#include "oddcover/construct.hpp"
#include "oddcover/error.hpp"
#include "support.hpp"

using namespace oddcover;

namespace {

bool odd_pair(const CodeWord& a, const CodeWord& b) {
  int count = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    count += (a[c] == Symbol::Zero && b[c] == Symbol::One) || (a[c] == Symbol::One && b[c] == Symbol::Zero);
  }
  return count % 2 == 1;
}

void check_cover(const ConstructionResult& r, const Graph& g) {
  CHECK(verify(r.cover, g).ok);
  CHECK(verify_by_incidence(r.cover, g));
}

}  // namespace

TEST_CASE("forest covers match a maximum matching") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph f = testing::random_forest(rng, 1 + static_cast<int>(rng() % 30), trial % 4 ? 0.85 : 0.4);
    const ConstructionResult r = forest_cover(f);
    check_cover(r, f);
    CHECK(r.size() == testing::forest_matching(f));
    CHECK(r.formula_value == r.size());
  }
  CHECK_THROWS_AS(forest_cover(cycle(4)), InvalidArgument);
}

TEST_CASE("bipartite covers have r2/2 bicliques") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_bipartite(rng, 1 + static_cast<int>(rng() % 16), 0.5);
    const ConstructionResult r = bipartite_cover(g);
    check_cover(r, g);
    CHECK(r.size() * 2 == two_rank(g));
    const auto sides = *find_bipartition(g);
    for (const Biclique& b : r.cover.bicliques) {
      for (Vertex v : b.x()) CHECK(sides[v - 1] == Side::A);
      for (Vertex v : b.y()) CHECK(sides[v - 1] == Side::B);
    }
  }
  CHECK_THROWS_AS(bipartite_cover(cycle(5)), InvalidArgument);
  CHECK(bipartite_cover(cycle(6)).size() == 2);
}

TEST_CASE("odd cycle covers") {
  for (int n = 3; n <= 63; n += 2) {
    const ConstructionResult r = odd_cycle_cover(n);
    check_cover(r, cycle(n));
    CHECK(r.size() == static_cast<std::size_t>((n + 1) / 2));
  }
}

TEST_CASE("K_8k words: one e each, complements, pairwise odd") {
  for (int k = 1; k <= 8; ++k) {
    const auto words = complete_8k_words(k);
    REQUIRE(words.size() == static_cast<std::size_t>(4 * k));
    std::vector<CodeWord> all;
    for (std::size_t i = 0; i < words.size(); ++i) {
      REQUIRE(words[i].size() == static_cast<std::size_t>(4 * k));
      CHECK(words[i][i] == Symbol::Eps);
      CHECK(std::count(words[i].begin(), words[i].end(), Symbol::Eps) == 1);
      all.push_back(words[i]);
      all.push_back(complement(words[i]));
    }
    for (std::size_t a = 0; a < all.size(); ++a) {
      for (std::size_t b = a + 1; b < all.size(); ++b) REQUIRE(odd_pair(all[a], all[b]));
    }
  }
}

TEST_CASE("complete graph covers") {
  for (int n = 1; n <= 65; ++n) {
    CAPTURE(n);
    const ConstructionResult r = complete_cover(n);
    check_cover(r, complete(n));
    const auto half = static_cast<std::size_t>((n + 1) / 2);
    if (n >= 2 && (n % 8 == 0 || n % 8 == 1 || n % 8 == 7)) CHECK(r.size() == half);
    CHECK(r.size() <= half + 1);
  }
}

TEST_CASE("adjacent twin covers") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    // Blow each vertex of a random graph up into an adjacent pair.
    const int h = 1 + static_cast<int>(rng() % 8);
    const Graph base = testing::random_graph(rng, h, 0.5);
    Graph g(2 * h);
    for (int v = 1; v <= h; ++v) g.add_edge(2 * v - 1, 2 * v);
    for (auto [u, v] : base.edges()) {
      for (int a : {2 * u - 1, 2 * u}) {
        for (int b : {2 * v - 1, 2 * v}) g.add_edge(a, b);
      }
    }
    const auto m = adjacent_twin_matching(g);
    REQUIRE(m);
    const ConstructionResult r = adjacent_twin_cover(g, *m);
    check_cover(r, g);
    CHECK(r.size() <= static_cast<std::size_t>(h + 1));
  }
}

TEST_CASE("rank covers use at most r2 bicliques") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, static_cast<int>(rng() % 25), 0.5);
    const ConstructionResult r = rank_cover(g);
    check_cover(r, g);
    CHECK(r.size() <= two_rank(g));
  }
}

TEST_CASE("star covers") {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, static_cast<int>(rng() % 20), 0.3);
    const ConstructionResult r = star_cover(g);
    check_cover(r, g);
    CHECK(r.size() <= r.formula_value);
    for (const Biclique& b : r.cover.bicliques) CHECK(b.x().size() == 1);
  }
}

TEST_CASE("disjoint triangles") {
  CHECK(k_triangles_cover(1).size() == 2);
  CHECK(k_triangles_cover(2).size() == 3);
  check_cover(k_triangles_cover(2), k_triangles(2));
  CHECK_THROWS_AS(k_triangles_cover(4), InvalidArgument);
}

TEST_CASE("dispatch follows the documented order") {
  CHECK(construct_auto(path(5)).family == Family::Forest);
  CHECK(construct_auto(cycle(6)).family == Family::Bipartite);
  CHECK(construct_auto(cycle(7)).family == Family::OddCycle);
  CHECK(construct_auto(complete(9)).family == Family::Complete);
  CHECK(construct_auto(complete(6)).family == Family::Complete);
  CHECK(construct_auto(k_triangles(2)).family == Family::Rank);
  const Graph blown = Graph::from_edges(6, {{1, 2}, {3, 4}, {5, 6}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}});
  CHECK(construct_auto(blown).family == Family::AdjacentTwin);
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_graph(rng, 1 + static_cast<int>(rng() % 12), 0.5);
    const ConstructionResult first = construct_auto(g);
    const ConstructionResult best = construct_auto(g, true);
    check_cover(first, g);
    check_cover(best, g);
    CHECK(best.size() <= first.size());
    for (Family f : kAutoOrder) {
      if (applicable(g, f)) CHECK(best.size() <= construct(g, f).size());
    }
  }
  const Graph shuffled_cycle = Graph::from_edges(5, {{1, 4}, {4, 2}, {2, 5}, {5, 3}, {3, 1}});
  check_cover(construct(shuffled_cycle, Family::OddCycle), shuffled_cycle);
  const Graph tri = disjoint_union(complete(3), complete(3));
  check_cover(construct(tri, Family::Triangles), tri);
  CHECK_THROWS_AS(construct(cycle(5), Family::Bipartite), InvalidArgument);
  CHECK(parse_family("odd-cycle") == Family::OddCycle);
  CHECK_FALSE(parse_family("nope"));
  for (Family f : kAutoOrder) CHECK(parse_family(to_string(f)) == f);
}
