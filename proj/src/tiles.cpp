#include "tilings/tiles.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "tilings/errors.hpp"

namespace tilings {

std::string_view shape_name(Shape shape) {
  switch (shape) {
    case Shape::domino: return "domino";
    case Shape::straight: return "straight";
    case Shape::skew: return "skew";
    case Shape::L: return "L";
    case Shape::square: return "square";
    case Shape::T: return "T";
  }
  return "?";
}

Shape parse_shape(std::string_view name) {
  if (name == "l") return Shape::L;
  if (name == "t") return Shape::T;
  for (Shape s : kAllShapes) {
    if (shape_name(s) == name) return s;
  }
  throw ParseError("unknown tile shape '" + std::string(name) +
                   "' (expected domino, straight, skew, L, square, T)");
}

std::vector<Cell> normalize_offsets(std::vector<Cell> cells) {
  if (cells.empty()) return cells;
  int min_col = cells.front().col, min_row = cells.front().row;
  for (const Cell& c : cells) {
    min_col = std::min(min_col, c.col);
    min_row = std::min(min_row, c.row);
  }
  for (Cell& c : cells) {
    c.col -= min_col;
    c.row -= min_row;
  }
  std::sort(cells.begin(), cells.end(), ScanOrder{});
  return cells;
}

OrientedTile::OrientedTile(Shape shape, std::vector<Cell> offsets, std::string label)
    : shape_(shape), offsets_(normalize_offsets(std::move(offsets))), label_(std::move(label)) {}

int OrientedTile::width() const {
  int w = 0;
  for (const Cell& c : offsets_) w = std::max(w, c.col + 1);
  return w;
}

int OrientedTile::height() const {
  int h = 0;
  for (const Cell& c : offsets_) h = std::max(h, c.row + 1);
  return h;
}

std::string OrientedTile::name() const {
  return std::string(shape_name(shape_)) + ":" + label_;
}

OrientedTile OrientedTile::transformed(const Dihedral& d) const {
  std::vector<Cell> image;
  image.reserve(offsets_.size());
  for (const Cell& c : offsets_) image.push_back(d.apply(c));
  OrientedTile result(shape_, std::move(image));
  // Recover the canonical label of the image.
  for (const OrientedTile& t : orientations(shape_)) {
    if (t == result) return t;
  }
  return result;
}

bool operator<(const OrientedTile& a, const OrientedTile& b) {
  return std::lexicographical_compare(a.offsets_.begin(), a.offsets_.end(), b.offsets_.begin(),
                                      b.offsets_.end(), [](const Cell& x, const Cell& y) {
                                        return ScanOrder{}(x, y);
                                      });
}

OrientedTile base_shape(Shape shape) {
  switch (shape) {
    case Shape::domino: return {shape, {{0, 0}, {1, 0}}};
    case Shape::straight: return {shape, {{0, 0}, {1, 0}, {2, 0}, {3, 0}}};
    case Shape::skew: return {shape, {{0, 0}, {1, 0}, {1, 1}, {2, 1}}};
    case Shape::L: return {shape, {{0, 0}, {0, 1}, {0, 2}, {1, 0}}};
    case Shape::square: return {shape, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    case Shape::T: return {shape, {{0, 0}, {1, 0}, {2, 0}, {1, 1}}};
  }
  throw std::invalid_argument("unknown shape");
}

std::vector<OrientedTile> orientations(Shape shape) {
  const OrientedTile base = base_shape(shape);
  std::vector<OrientedTile> result;
  int horizontal = 0, vertical = 0;
  for (const Dihedral& d : Dihedral::all()) {
    std::vector<Cell> image;
    for (const Cell& c : base.offsets()) image.push_back(d.apply(c));
    OrientedTile candidate(shape, std::move(image));
    if (std::find(result.begin(), result.end(), candidate) != result.end()) continue;

    std::string label;
    const bool wide = candidate.width() > candidate.height();
    switch (shape) {
      case Shape::domino:
      case Shape::straight:
        label = wide ? "h" : "v";
        break;
      case Shape::skew:
        label = wide ? "h" + std::to_string(++horizontal) : "v" + std::to_string(++vertical);
        break;
      case Shape::L:
        label = (d.reflect ? "f" : "r") + std::to_string(d.rotation);
        break;
      case Shape::T:
        label = "r" + std::to_string(d.rotation);
        break;
      case Shape::square:
        label = "o";
        break;
    }
    result.emplace_back(shape, candidate.offsets(), std::move(label));
  }
  return result;
}

namespace {

std::vector<OrientedTile> filter_by_direction(Shape shape, const std::vector<OrientedTile>& tiles,
                                              bool horizontal) {
  if (shape != Shape::domino && shape != Shape::straight && shape != Shape::skew) {
    throw std::invalid_argument(std::string(shape_name(shape)) +
                                " has no horizontal/vertical distinction");
  }
  std::vector<OrientedTile> result;
  for (const OrientedTile& t : tiles) {
    if (t.shape() != shape) continue;
    if ((t.width() > t.height()) == horizontal) result.push_back(t);
  }
  return result;
}

}  // namespace

std::vector<OrientedTile> filter_horizontal(Shape shape, const std::vector<OrientedTile>& tiles) {
  return filter_by_direction(shape, tiles, true);
}

std::vector<OrientedTile> filter_vertical(Shape shape, const std::vector<OrientedTile>& tiles) {
  return filter_by_direction(shape, tiles, false);
}

TileSet::TileSet(std::vector<WeightedTile> entries, std::string descriptor)
    : entries_(std::move(entries)), descriptor_(std::move(descriptor)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].weight == 0) throw std::invalid_argument("tile weight must be nonzero");
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[i].tile == entries_[j].tile) {
        throw std::invalid_argument("duplicate tile " + entries_[i].tile.name());
      }
    }
  }
}

std::string TileSet::canonical() const {
  std::vector<const WeightedTile*> sorted;
  for (const WeightedTile& e : entries_) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](const WeightedTile* a, const WeightedTile* b) {
    if (a->tile.shape() != b->tile.shape()) return a->tile.shape() < b->tile.shape();
    return a->tile < b->tile;
  });
  std::string out;
  for (const WeightedTile* e : sorted) {
    if (!out.empty()) out += ',';
    out += e->tile.name();
    if (e->weight != 1) out += '*' + std::to_string(e->weight);
  }
  return out;
}

bool TileSet::closed_under(const Dihedral& d) const {
  for (const WeightedTile& e : entries_) {
    const OrientedTile image = e.tile.transformed(d);
    const auto it = std::find_if(entries_.begin(), entries_.end(),
                                 [&](const WeightedTile& x) { return x.tile == image; });
    if (it == entries_.end() || it->weight != e.weight) return false;
  }
  return true;
}

TileSet TileSet::transformed(const Dihedral& d) const {
  std::vector<WeightedTile> image;
  for (const WeightedTile& e : entries_) image.push_back({e.tile.transformed(d), e.weight});
  return TileSet(std::move(image), descriptor_);
}

namespace {

bool is_code(std::string_view spec) {
  return spec.size() == 6 &&
         std::all_of(spec.begin(), spec.end(), [](char c) { return c == '0' || c == '1'; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

TileSet parse_tileset(std::string_view spec) {
  const std::string descriptor(spec);
  spec = trim(spec);
  std::vector<WeightedTile> entries;
  const auto add = [&](const OrientedTile& t, long weight, std::string_view item) {
    for (const WeightedTile& e : entries) {
      if (e.tile == t) {
        throw ParseError("tile " + t.name() + " listed twice (at '" + std::string(item) + "')");
      }
    }
    entries.push_back({t, weight});
  };

  if (is_code(spec)) {
    if (spec == "000000") throw ParseError("tile code 000000 enables no tiles");
    for (std::size_t bit = 0; bit < 6; ++bit) {
      if (spec[bit] != '1') continue;
      for (const OrientedTile& t : orientations(kAllShapes[bit])) add(t, 1, spec);
    }
    return TileSet(std::move(entries), descriptor);
  }

  if (spec.empty()) throw ParseError("empty tile spec");
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = std::min(spec.find(',', pos), spec.size());
    const std::string_view item = trim(spec.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) throw ParseError("empty item in tile spec '" + descriptor + "'");

    std::string_view body = item;
    long weight = 1;
    if (const auto star = body.find('*'); star != std::string_view::npos) {
      const std::string_view w = body.substr(star + 1);
      const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), weight);
      if (w.empty() || ec != std::errc{} || ptr != w.data() + w.size()) {
        throw ParseError("bad weight '" + std::string(w) + "' in '" + std::string(item) + "'");
      }
      if (weight == 0) throw ParseError("weight 0 in '" + std::string(item) + "'");
      body = body.substr(0, star);
    }

    std::string_view filter;
    if (const auto colon = body.find(':'); colon != std::string_view::npos) {
      filter = body.substr(colon + 1);
      body = body.substr(0, colon);
    }
    const Shape shape = parse_shape(body);
    const std::vector<OrientedTile> all = orientations(shape);

    std::vector<OrientedTile> chosen;
    if (filter.empty()) {
      chosen = all;
    } else if (filter == "h" || filter == "v") {
      try {
        chosen = filter == "h" ? filter_horizontal(shape, all) : filter_vertical(shape, all);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " (in '" + std::string(item) + "')");
      }
    } else {
      for (const OrientedTile& t : all) {
        if (t.label() == filter) chosen.push_back(t);
      }
      if (chosen.empty()) {
        throw ParseError("unknown orientation '" + std::string(filter) + "' for " +
                         std::string(shape_name(shape)));
      }
    }
    for (const OrientedTile& t : chosen) add(t, weight, item);
    if (comma == spec.size()) break;
  }
  return TileSet(std::move(entries), descriptor);
}

}  // namespace tilings
