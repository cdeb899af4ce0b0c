#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "tilings/grid.hpp"

namespace tilings {

enum class Shape { domino, straight, skew, L, square, T };

inline constexpr std::array<Shape, 6> kAllShapes = {Shape::domino, Shape::straight, Shape::skew,
                                                    Shape::L,      Shape::square,   Shape::T};

std::string_view shape_name(Shape shape);
Shape parse_shape(std::string_view name);  // throws ParseError

// A tile placed in one orientation, translated so that min col = min row = 0.
// Offsets are kept sorted, so equality is equality of offset sets.
class OrientedTile {
 public:
  OrientedTile(Shape shape, std::vector<Cell> offsets, std::string label = {});

  Shape shape() const { return shape_; }
  const std::vector<Cell>& offsets() const { return offsets_; }
  const std::string& label() const { return label_; }
  std::size_t size() const { return offsets_.size(); }
  int width() const;
  int height() const;

  // "shape:label", e.g. "skew:h1".
  std::string name() const;

  OrientedTile transformed(const Dihedral& d) const;

  friend bool operator==(const OrientedTile& a, const OrientedTile& b) { return a.offsets_ == b.offsets_; }
  friend bool operator<(const OrientedTile& a, const OrientedTile& b);

 private:
  Shape shape_;
  std::vector<Cell> offsets_;
  std::string label_;
};

// Normalizes to min corner (0,0) and sorts in scan order.
std::vector<Cell> normalize_offsets(std::vector<Cell> cells);

OrientedTile base_shape(Shape shape);

// All translationally inequivalent images under the 8 lattice symmetries,
// labelled: h/v for domino and straight, h1 h2 v1 v2 for skew, r0..r3 for T,
// r0..r3 and f0..f3 (reflected) for L, o for the square.
std::vector<OrientedTile> orientations(Shape shape);

// Horizontal orientations of a domino, straight or skew tile. Throws
// std::invalid_argument for shapes without that distinction.
std::vector<OrientedTile> filter_horizontal(Shape shape, const std::vector<OrientedTile>& tiles);
std::vector<OrientedTile> filter_vertical(Shape shape, const std::vector<OrientedTile>& tiles);

struct WeightedTile {
  OrientedTile tile;
  long weight = 1;
};

class TileSet {
 public:
  TileSet() = default;
  TileSet(std::vector<WeightedTile> entries, std::string descriptor);

  const std::vector<WeightedTile>& entries() const { return entries_; }
  const std::string& descriptor() const { return descriptor_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // Order-independent description of the entries, stable across spellings
  // ("100010" and "domino,square" agree). Used as a cache key.
  std::string canonical() const;

  bool closed_under(const Dihedral& d) const;
  TileSet transformed(const Dihedral& d) const;

  friend bool operator==(const TileSet& a, const TileSet& b) { return a.canonical() == b.canonical(); }

 private:
  std::vector<WeightedTile> entries_;
  std::string descriptor_;
};

// Grammar: a six-character 0/1 code (domino, straight, skew, L, square, T),
// or a comma-separated list of `shape[:filter][*weight]` where filter is h,
// v, or an orientation label. Throws ParseError.
TileSet parse_tileset(std::string_view spec);

}  // namespace tilings
