#include <doctest.h>

#include "qsum/error.hpp"
#include "qsum/graph6.hpp"
#include "support.hpp"

using namespace qsum;

TEST_CASE("graph6: matches the bit-string reference encoder") {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 3, 5, 8, 13, 30, 62, 63, 64, 100, 128}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = testing::random_graph(n, 0.3, rng);
      const std::string text = to_graph6(g);
      CHECK(text == oracle::graph6(testing::to_oracle(g)));
      CHECK(from_graph6(text) == g);
    }
  }
}

TEST_CASE("graph6: known strings") {
  CHECK(to_graph6(complete_graph(3)) == "Bw");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(from_graph6(">>graph6<<Bw\n") == complete_graph(3));
}

TEST_CASE("graph6: malformed input") {
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("B"), ParseError);      // truncated
  CHECK_THROWS_AS(from_graph6("Bww"), ParseError);    // trailing bytes
  CHECK_THROWS_AS(from_graph6("B\x7f"), ParseError);  // byte out of range
  CHECK_THROWS_AS(from_graph6("Bx"), ParseError);     // padding bits set
  CHECK_THROWS_AS(from_graph6("?"), ParseError);      // order 0
  try {
    from_graph6("Bww");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}
