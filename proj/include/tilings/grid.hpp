#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tilings {

// A unit square of the lattice, identified by its lower-left corner.
struct Cell {
  int col = 0;
  int row = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Canonical scan order: top row first, then left to right.
struct ScanOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.row != b.row) return a.row > b.row;
    return a.col < b.col;
  }
};

// One of the 8 symmetries of the square lattice. Applied as an optional
// reflection (x,y) -> (-x,y) followed by `rotation` quarter turns
// (x,y) -> (y,-x). Acts on points; cells are mapped through their centres.
struct Dihedral {
  int rotation = 0;  // 0..3
  bool reflect = false;

  static std::vector<Dihedral> all();
  static Dihedral transpose();  // (x,y) -> (y,x)

  // Image of a lattice point.
  void apply_point(int& x, int& y) const;
  // Image of the unit cell with lower-left corner `c`.
  Cell apply(const Cell& c) const;
};

// Half-open column span [begin, end) in one row.
struct Span {
  int begin = 0;
  int end = 0;
  int length() const { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

// A finite set of cells. Immutable after construction.
class Region {
 public:
  using RowMap = std::map<int, std::vector<Span>, std::greater<int>>;

  Region() = default;
  Region(std::vector<Cell> cells, std::string descriptor);

  const std::string& descriptor() const { return descriptor_; }
  // Cells in scan order.
  std::span<const Cell> cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(const Cell& c) const;

  // Rows from top to bottom, each a sorted list of maximal spans.
  const RowMap& rows() const { return rows_; }

  int min_col() const { return min_col_; }
  int max_col() const { return max_col_; }
  int min_row() const { return min_row_; }
  int max_row() const { return max_row_; }
  int width() const { return empty() ? 0 : max_col_ - min_col_ + 1; }
  int height() const { return empty() ? 0 : max_row_ - min_row_ + 1; }

  Region transformed(const Dihedral& d) const;

  // Same cell set, descriptor ignored.
  friend bool operator==(const Region& a, const Region& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<Cell> cells_;
  std::string descriptor_;
  RowMap rows_;
  std::vector<bool> mask_;  // bounding-box membership, row-major from min corner
  int min_col_ = 0, max_col_ = -1, min_row_ = 0, max_row_ = -1;
};

enum class HalfSide { top, bottom };

Region aztec_diamond(int n);
Region aztec_half(int n, HalfSide side);
Region rectangle(int width, int height);

// Region families indexed by n, used for sequence generation.
enum class Family { aztec, rect_2n_2n, rect_2n_2n2, rect_2n_4n };

Region family_region(Family family, int n);
std::string family_name(Family family);
Family parse_family(const std::string& text);

// Parses `aztec:N`, `aztechalf:N:top|bottom`, `rect:WxH`. Throws ParseError.
Region parse_region(const std::string& text);

}  // namespace tilings
