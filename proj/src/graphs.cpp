#include "tilings/graphs.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "tilings/errors.hpp"

namespace tilings {

std::string edge_kind_name(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::square: return "square";
    case EdgeKind::skew: return "skew";
    case EdgeKind::straight: return "straight";
  }
  return "?";
}

bool EdgeKinds::contains(EdgeKind k) const {
  switch (k) {
    case EdgeKind::square: return square;
    case EdgeKind::skew: return skew;
    case EdgeKind::straight: return straight;
  }
  return false;
}

std::vector<Brick> horizontal_brick_tiling(const Region& region) {
  std::vector<Brick> bricks;
  for (const auto& [row, spans] : region.rows()) {
    for (const Span& s : spans) {
      if (s.length() % 2 != 0) {
        throw std::invalid_argument("row " + std::to_string(row) + " has a span of odd length " +
                                    std::to_string(s.length()) + " starting at column " +
                                    std::to_string(s.begin));
      }
      for (int c = s.begin; c < s.end; c += 2) bricks.push_back({row, c});
    }
  }
  return bricks;
}

MatchGraph derived_graph(const Region& region, EdgeKinds kinds) {
  if (!kinds.any()) throw std::invalid_argument("derived_graph: no edge kinds selected");
  MatchGraph g;
  g.vertices = horizontal_brick_tiling(region);
  const auto& v = g.vertices;
  for (int a = 0; a < static_cast<int>(v.size()); ++a) {
    for (int b = a + 1; b < static_cast<int>(v.size()); ++b) {
      const int dr = std::abs(v[a].row - v[b].row);
      const int dc = std::abs(v[a].col - v[b].col);
      EdgeKind kind;
      if (dr == 1 && dc == 0) {
        kind = EdgeKind::square;
      } else if (dr == 1 && dc == 1) {
        kind = EdgeKind::skew;
      } else if (dr == 0 && dc == 2) {
        kind = EdgeKind::straight;
      } else {
        continue;
      }
      if (kinds.contains(kind)) g.edges.push_back({a, b, kind});
    }
  }
  return g;
}

GraphFamily parse_graph_family(const std::string& text) {
  for (GraphFamily f : {GraphFamily::doubled_diagonal, GraphFamily::triangle, GraphFamily::superimposed}) {
    if (graph_family_name(f) == text) return f;
  }
  throw ParseError("unknown graph kind '" + text + "' (expected doubled-diagonal, triangle, superimposed)");
}

std::string graph_family_name(GraphFamily family) {
  switch (family) {
    case GraphFamily::doubled_diagonal: return "doubled-diagonal";
    case GraphFamily::triangle: return "triangle";
    case GraphFamily::superimposed: return "superimposed";
  }
  return "?";
}

MatchGraph family_graph(GraphFamily family, int n) {
  if (n < 1) throw std::invalid_argument("graph order must be >= 1");
  switch (family) {
    case GraphFamily::doubled_diagonal:
      return derived_graph(aztec_diamond(n), {.square = true, .skew = true});
    case GraphFamily::triangle:
      return derived_graph(aztec_half(n, HalfSide::top), {.skew = true, .straight = true});
    case GraphFamily::superimposed:
      return derived_graph(aztec_diamond(n), {.square = true, .skew = true, .straight = true});
  }
  throw std::logic_error("unreachable graph family");
}

namespace {

struct RowLinks {
  std::vector<std::vector<int>> same;  // local index -> later partners in the row
  std::vector<std::vector<int>> down;  // local index -> partners in the next row
};

class RowMatcher {
 public:
  RowMatcher(const RowLinks& links, std::map<std::uint64_t, Count>& out)
      : links_(links), out_(out), m_(static_cast<int>(links.same.size())) {}

  void run(std::uint64_t taken, const Count& ways) { step(0, taken, 0, ways); }

 private:
  void step(int i, std::uint64_t taken, std::uint64_t below, const Count& ways) {
    while (i < m_ && (taken >> i & 1)) ++i;
    if (i == m_) {
      out_[below] += ways;
      return;
    }
    for (int j : links_.same[i]) {
      if (!(taken >> j & 1)) step(i + 1, taken | (std::uint64_t{1} << j), below, ways);
    }
    for (int u : links_.down[i]) {
      if (!(below >> u & 1)) step(i + 1, taken, below | (std::uint64_t{1} << u), ways);
    }
  }

  const RowLinks& links_;
  std::map<std::uint64_t, Count>& out_;
  int m_;
};

}  // namespace

Count count_perfect_matchings(const MatchGraph& g) {
  if (g.vertices.size() % 2 != 0) return 0;
  if (g.vertices.empty()) return 1;

  // Group vertices by row, top to bottom.
  std::vector<int> row_values;
  for (const Brick& b : g.vertices) row_values.push_back(b.row);
  std::sort(row_values.begin(), row_values.end(), std::greater<>());
  row_values.erase(std::unique(row_values.begin(), row_values.end()), row_values.end());
  std::unordered_map<int, int> row_index;
  for (int i = 0; i < static_cast<int>(row_values.size()); ++i) row_index[row_values[i]] = i;

  std::vector<std::vector<int>> members(row_values.size());
  std::vector<int> local(g.vertices.size());
  std::vector<int> layer(g.vertices.size());
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) {
    const int r = row_index[g.vertices[v].row];
    layer[v] = r;
    local[v] = static_cast<int>(members[r].size());
    members[r].push_back(v);
    if (members[r].size() > 64) throw ResourceError("matching rows wider than 64 vertices");
  }

  std::vector<RowLinks> links(row_values.size());
  for (std::size_t r = 0; r < links.size(); ++r) {
    links[r].same.resize(members[r].size());
    links[r].down.resize(members[r].size());
  }
  for (const Edge& e : g.edges) {
    int a = e.u, b = e.v;
    if (layer[a] > layer[b]) std::swap(a, b);
    if (layer[a] == layer[b]) {
      if (local[a] > local[b]) std::swap(a, b);
      links[layer[a]].same[local[a]].push_back(local[b]);
    } else if (layer[b] == layer[a] + 1 && g.vertices[a].row == g.vertices[b].row + 1) {
      links[layer[a]].down[local[a]].push_back(local[b]);
    } else {
      throw std::invalid_argument("edge between non-adjacent rows; graph is not layered");
    }
  }

  std::map<std::uint64_t, Count> cur{{0, Count(1)}};
  for (std::size_t r = 0; r < links.size(); ++r) {
    std::map<std::uint64_t, Count> next;
    RowMatcher matcher(links[r], next);
    for (const auto& [taken, ways] : cur) matcher.run(taken, ways);
    cur = std::move(next);
  }
  const auto it = cur.find(0);
  return it == cur.end() ? Count(0) : it->second;
}

std::string emit_dot(const MatchGraph& g, const std::string& name) {
  const auto id = [&](int v) {
    return "\"r" + std::to_string(g.vertices[v].row) + "c" + std::to_string(g.vertices[v].col) + "\"";
  };
  std::vector<Edge> edges = g.edges;
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v) out << "  " << id(v) << ";\n";
  for (const Edge& e : edges) {
    out << "  " << id(e.u) << " -- " << id(e.v) << " [label=\"" << edge_kind_name(e.kind) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace tilings
