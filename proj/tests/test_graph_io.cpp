#include <doctest.h>

#include <random>

#include "oddcover/error.hpp"
#include "oddcover/graph_io.hpp"
#include "support.hpp"

using namespace oddcover;

namespace {

std::size_t offset_of(auto&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("expected a ParseError");
  return 0;
}

}  // namespace

TEST_CASE("graph6 known encodings") {
  CHECK(to_graph6(complete(5)) == "D~{");
  CHECK(to_graph6(cycle(5)) == "Dhc");
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(parse_graph6("D~{") == complete(5));
  CHECK(parse_graph6(">>graph6<<Dhc\n") == cycle(5));
}

TEST_CASE("graph6 round trip across header widths") {
  std::mt19937_64 rng(21);
  for (int n : {0, 1, 2, 7, 62, 63, 64, 130, 300}) {
    const Graph g = testing::random_graph(rng, n, 0.3);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
  CHECK(to_graph6(Graph(63)).substr(0, 4) == "~??~");
  CHECK_THROWS_AS(parse_graph6("~??}"), ParseError);
}

TEST_CASE("graph6 corpus round trips") {
  const auto gs = testing::small_graphs();
  CHECK(gs.size() == 208);
  for (const Graph& g : gs) CHECK(parse_graph6(to_graph6(g)) == g);
}

TEST_CASE("graph6 errors carry offsets") {
  CHECK(offset_of([] { parse_graph6(":Fa@x^"); }) == 0);
  CHECK(offset_of([] { parse_graph6("&B?"); }) == 0);
  CHECK(offset_of([] { parse_graph6("D~"); }) == 2);
  CHECK(offset_of([] { parse_graph6("D~{?"); }) == 3);
  CHECK(offset_of([] { parse_graph6("D ~"); }) == 1);
  CHECK(offset_of([] { parse_graph6("A`"); }) == 1);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("edge lists") {
  const Graph g = parse_edge_list("# five-cycle\nn 5\n1 2\n2 3\n3 4\n4 5\n5 1\n");
  CHECK(g == cycle(5));
  CHECK(parse_edge_list(to_edge_list(g)) == g);
  CHECK(parse_edge_list("1 2\n2 3\n") == path(3));
  CHECK(parse_edge_list(to_edge_list(empty_graph(4))) == empty_graph(4));
  CHECK(offset_of([] { parse_edge_list("1 2\n3 x\n"); }) == 6);
  CHECK(offset_of([] { parse_edge_list("1 1\n"); }) == 0);
  CHECK(offset_of([] { parse_edge_list("0 1\n"); }) == 0);
  CHECK(offset_of([] { parse_edge_list("n 3\n1 4\n"); }) == 6);
  CHECK_THROWS_AS(parse_edge_list("1\n"), ParseError);
}

TEST_CASE("format auto-detection") {
  CHECK(parse_graph_auto("D~{\n") == complete(5));
  CHECK(parse_graph_auto("1 2\n") == path(2));
  CHECK_THROWS_AS(parse_graph_auto("not a graph"), ParseError);
}
