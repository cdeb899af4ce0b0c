#pragma once

#include <string>
#include <vector>

#include "tilings/count.hpp"
#include "tilings/grid.hpp"

namespace tilings {

// Horizontal domino covering (col,row) and (col+1,row).
struct Brick {
  int row = 0;
  int col = 0;
  friend bool operator==(const Brick&, const Brick&) = default;
};

enum class EdgeKind { square, skew, straight };

std::string edge_kind_name(EdgeKind kind);

struct Edge {
  int u = 0;  // vertex indices, u < v
  int v = 0;
  EdgeKind kind = EdgeKind::square;
};

struct EdgeKinds {
  bool square = false;
  bool skew = false;
  bool straight = false;

  bool contains(EdgeKind k) const;
  bool any() const { return square || skew || straight; }
};

// Simple graph on the bricks of an all-horizontal domino tiling. Vertices are
// in scan order (top row first); edges join bricks in equal or adjacent rows.
struct MatchGraph {
  std::vector<Brick> vertices;
  std::vector<Edge> edges;
};

// The unique tiling of `region` by horizontal dominos. Throws
// std::invalid_argument naming the row of any odd-length span.
std::vector<Brick> horizontal_brick_tiling(const Region& region);

// Edges: square when bricks in adjacent rows share a column, skew when they
// are offset by one column, straight when they are neighbours in one row.
MatchGraph derived_graph(const Region& region, EdgeKinds kinds);

enum class GraphFamily { doubled_diagonal, triangle, superimposed };

GraphFamily parse_graph_family(const std::string& text);
std::string graph_family_name(GraphFamily family);

// doubled_diagonal: aztec(n) with {square, skew}; triangle: top half of
// aztec(n) with {skew, straight}; superimposed: aztec(n) with all three.
MatchGraph family_graph(GraphFamily family, int n);

// Row-by-row frontier count of perfect matchings.
Count count_perfect_matchings(const MatchGraph& g);

std::string emit_dot(const MatchGraph& g, const std::string& name = "G");

}  // namespace tilings
