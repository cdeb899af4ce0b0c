#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "random_cases.hpp"
#include "tilings/enumerate.hpp"
#include "tilings/errors.hpp"
#include "tilings/graphs.hpp"
#include "tilings/padic.hpp"

using namespace tilings;

TEST_CASE("horizontal brick tiling") {
  const auto bricks = horizontal_brick_tiling(aztec_diamond(2));
  CHECK(bricks.size() == 6);
  CHECK(bricks.front() == Brick{1, -1});
  CHECK_THROWS_WITH_AS(horizontal_brick_tiling(rectangle(3, 2)), doctest::Contains("row"), std::invalid_argument);
}

TEST_CASE("derived edges follow the brick geometry") {
  const MatchGraph g = derived_graph(rectangle(4, 2), {true, true, true});
  REQUIRE(g.vertices.size() == 4);
  std::multiset<std::string> kinds;
  for (const auto& e : g.edges) {
    CHECK(e.u < e.v);
    kinds.insert(edge_kind_name(e.kind));
  }
  CHECK(kinds.count("square") == 2);
  CHECK(kinds.count("straight") == 2);
  CHECK(kinds.count("skew") == 0);
  const MatchGraph az = derived_graph(aztec_diamond(1), {false, true, false});
  CHECK(az.vertices.size() == 2);
  CHECK(az.edges.empty());
}

TEST_CASE("family graphs") {
  CHECK(family_graph(GraphFamily::doubled_diagonal, 3).vertices.size() == 12);
  CHECK(family_graph(GraphFamily::triangle, 4).vertices.size() == 10);
  for (GraphFamily f : {GraphFamily::doubled_diagonal, GraphFamily::triangle, GraphFamily::superimposed}) {
    CHECK(parse_graph_family(graph_family_name(f)) == f);
  }
  CHECK_THROWS_AS(parse_graph_family("hexagonal"), ParseError);
}

TEST_CASE("matching counter agrees with the branching oracle") {
  int graphs = 0;
  for (const Region& r : testcases::even_span_regions()) {
    for (const EdgeKinds& kinds : testcases::all_kind_sets()) {
      const MatchGraph g = derived_graph(r, kinds);
      if (g.vertices.size() > 14) continue;
      CAPTURE(r.descriptor());
      CHECK(count_perfect_matchings(g) == oracle::brute_force_matchings(g));
      ++graphs;
    }
  }
  CHECK(graphs > 100);
}

TEST_CASE("matching counts equal tiling counts") {
  const TileSet skew_square = parse_tileset("skew:h,square");
  const TileSet skew_straight = parse_tileset("skew:h,straight:h");
  const TileSet all_three = parse_tileset("skew:h,straight:h,square");
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    const Region az = aztec_diamond(n);
    CHECK(count_perfect_matchings(family_graph(GraphFamily::doubled_diagonal, n)) == count_tilings(az, skew_square));
    const Count tri = count_perfect_matchings(family_graph(GraphFamily::triangle, n));
    CHECK(tri * tri == count_tilings(az, skew_straight));
    CHECK(count_perfect_matchings(family_graph(GraphFamily::superimposed, n)) == count_tilings(az, all_three));
  }
}

TEST_CASE("superimposed counts carry a power of two") {
  const std::vector<Count> expected = {1, 2, 10, 116, 3212, 209152, 32133552};
  for (int n = 1; n <= 7; ++n) {
    const Count c = count_perfect_matchings(family_graph(GraphFamily::superimposed, n));
    CHECK(c == expected[static_cast<std::size_t>(n - 1)]);
    CHECK(v2_split(c).v2 >= static_cast<unsigned>(n / 2));
  }
}

TEST_CASE("triangle counts vanish off 0 and 3 mod 4 and have predictable valuations") {
  // Nonzero terms are indexed j = 1, 2, ... over sides 0, 3, 4, 7, 8, ...;
  // side 0 is the empty graph with one matching.
  int j = 1;
  CHECK(v2_split(Count(1)).v2 == 0);
  for (int side = 1; side <= 12; ++side) {
    const Count c = count_perfect_matchings(family_graph(GraphFamily::triangle, side));
    if (side % 4 == 1 || side % 4 == 2) {
      CHECK(c == 0);
      continue;
    }
    ++j;
    CAPTURE(side);
    CHECK(v2_split(c).v2 == static_cast<unsigned>(j / 2));
  }
}

TEST_CASE("dot output") {
  const MatchGraph g = family_graph(GraphFamily::superimposed, 1);
  const std::string dot = emit_dot(g, "superimposed_1");
  CHECK(dot.rfind("graph superimposed_1 {", 0) == 0);
  CHECK(dot.find("\"r0c-1\" -- \"r-1c-1\" [label=\"square\"];") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
  CHECK(dot.back() == '\n');
  const std::string big = emit_dot(family_graph(GraphFamily::doubled_diagonal, 3));
  CHECK(big.rfind("graph G {", 0) == 0);
  std::size_t lines = 0;
  for (char ch : big) lines += ch == '\n';
  const MatchGraph g3 = family_graph(GraphFamily::doubled_diagonal, 3);
  CHECK(lines == 2 + g3.vertices.size() + g3.edges.size());
}
