#include "tilings/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "tilings/count.hpp"
#include "tilings/errors.hpp"

namespace tilings {

Count parse_count(const std::string& text) {
  Count value;
  if (text.empty() || value.set_str(text, 10) != 0) {
    throw ParseError("not a decimal integer: '" + text + "'");
  }
  return value;
}

std::vector<Dihedral> Dihedral::all() {
  std::vector<Dihedral> result;
  for (bool reflect : {false, true}) {
    for (int rotation = 0; rotation < 4; ++rotation) result.push_back({rotation, reflect});
  }
  return result;
}

Dihedral Dihedral::transpose() {
  // (x,y) -> (-x,y) -> (y,x)
  return {1, true};
}

void Dihedral::apply_point(int& x, int& y) const {
  if (reflect) x = -x;
  for (int r = 0; r < rotation; ++r) {
    const int nx = y;
    const int ny = -x;
    x = nx;
    y = ny;
  }
}

Cell Dihedral::apply(const Cell& c) const {
  int x0 = c.col, y0 = c.row;
  int x1 = c.col + 1, y1 = c.row + 1;
  apply_point(x0, y0);
  apply_point(x1, y1);
  return {std::min(x0, x1), std::min(y0, y1)};
}

Region::Region(std::vector<Cell> cells, std::string descriptor)
    : cells_(std::move(cells)), descriptor_(std::move(descriptor)) {
  std::sort(cells_.begin(), cells_.end(), ScanOrder{});
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
  if (cells_.empty()) return;

  min_col_ = max_col_ = cells_.front().col;
  min_row_ = max_row_ = cells_.front().row;
  for (const Cell& c : cells_) {
    min_col_ = std::min(min_col_, c.col);
    max_col_ = std::max(max_col_, c.col);
    min_row_ = std::min(min_row_, c.row);
    max_row_ = std::max(max_row_, c.row);
  }
  mask_.assign(static_cast<std::size_t>(width()) * height(), false);
  for (const Cell& c : cells_) {
    mask_[static_cast<std::size_t>(c.row - min_row_) * width() + (c.col - min_col_)] = true;
  }

  // Cells are in scan order, so each row's columns arrive ascending.
  for (const Cell& c : cells_) {
    auto& spans = rows_[c.row];
    if (!spans.empty() && spans.back().end == c.col) {
      ++spans.back().end;
    } else {
      spans.push_back({c.col, c.col + 1});
    }
  }
}

bool Region::contains(const Cell& c) const {
  if (empty() || c.col < min_col_ || c.col > max_col_ || c.row < min_row_ || c.row > max_row_) {
    return false;
  }
  return mask_[static_cast<std::size_t>(c.row - min_row_) * width() + (c.col - min_col_)];
}

Region Region::transformed(const Dihedral& d) const {
  std::vector<Cell> image;
  image.reserve(cells_.size());
  for (const Cell& c : cells_) image.push_back(d.apply(c));
  return Region(std::move(image), descriptor_);
}

Region aztec_diamond(int n) {
  if (n < 0) throw std::invalid_argument("aztec_diamond: order must be nonnegative");
  std::vector<Cell> cells;
  const auto reach = [](int v) { return std::max(std::abs(v), std::abs(v + 1)); };
  for (int j = -n - 1; j <= n; ++j) {
    for (int i = -n - 1; i <= n; ++i) {
      if (reach(i) + reach(j) <= n + 1) cells.push_back({i, j});
    }
  }
  return Region(std::move(cells), "aztec:" + std::to_string(n));
}

Region aztec_half(int n, HalfSide side) {
  if (n < 1) throw std::invalid_argument("aztec_half: order must be positive");
  const Region full = aztec_diamond(n);
  std::vector<Cell> cells;
  for (const Cell& c : full.cells()) {
    if ((side == HalfSide::top) == (c.row >= 0)) cells.push_back(c);
  }
  return Region(std::move(cells),
                "aztechalf:" + std::to_string(n) + (side == HalfSide::top ? ":top" : ":bottom"));
}

Region rectangle(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("rectangle: sides must be positive");
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(width) * height);
  for (int j = 0; j < height; ++j) {
    for (int i = 0; i < width; ++i) cells.push_back({i, j});
  }
  return Region(std::move(cells), "rect:" + std::to_string(width) + "x" + std::to_string(height));
}

Region family_region(Family family, int n) {
  if (n < 0) throw std::invalid_argument("family_region: n must be nonnegative");
  switch (family) {
    case Family::aztec:
      return aztec_diamond(n);
    case Family::rect_2n_2n:
      return n == 0 ? Region({}, "rect:0x0") : rectangle(2 * n, 2 * n);
    case Family::rect_2n_2n2:
      return n == 0 ? Region({}, "rect:0x2") : rectangle(2 * n, 2 * n + 2);
    case Family::rect_2n_4n:
      return n == 0 ? Region({}, "rect:0x0") : rectangle(2 * n, 4 * n);
  }
  throw std::logic_error("unreachable family");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::aztec:
      return "aztec";
    case Family::rect_2n_2n:
      return "rect2nx2n";
    case Family::rect_2n_2n2:
      return "rect2nx2n+2";
    case Family::rect_2n_4n:
      return "rect2nx4n";
  }
  throw std::logic_error("unreachable family");
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::aztec, Family::rect_2n_2n, Family::rect_2n_2n2, Family::rect_2n_4n}) {
    if (text == family_name(f)) return f;
  }
  throw ParseError("unknown region family '" + text +
                   "' (expected aztec, rect2nx2n, rect2nx2n+2, rect2nx4n)");
}

namespace {

int parse_int(std::string_view text, const std::string& context) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError("bad integer '" + std::string(text) + "' in " + context);
  }
  return value;
}

}  // namespace

Region parse_region(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("region spec needs a ':' in '" + text + "'");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);

  if (kind == "aztec") {
    const int n = parse_int(rest, text);
    if (n < 0) throw ParseError("aztec order must be >= 0 in '" + text + "'");
    return aztec_diamond(n);
  }
  if (kind == "aztechalf") {
    const auto second = rest.find(':');
    if (second == std::string::npos) throw ParseError("expected aztechalf:N:top|bottom, got '" + text + "'");
    const int n = parse_int(std::string_view(rest).substr(0, second), text);
    const std::string side = rest.substr(second + 1);
    if (n < 1) throw ParseError("aztechalf order must be >= 1 in '" + text + "'");
    if (side == "top") return aztec_half(n, HalfSide::top);
    if (side == "bottom") return aztec_half(n, HalfSide::bottom);
    throw ParseError("aztechalf side must be top or bottom in '" + text + "'");
  }
  if (kind == "rect") {
    const auto x = rest.find('x');
    if (x == std::string::npos) throw ParseError("expected rect:WxH, got '" + text + "'");
    const int w = parse_int(std::string_view(rest).substr(0, x), text);
    const int h = parse_int(std::string_view(rest).substr(x + 1), text);
    if (w < 1 || h < 1) throw ParseError("rectangle sides must be >= 1 in '" + text + "'");
    return rectangle(w, h);
  }
  throw ParseError("unknown region kind '" + kind + "' (expected aztec, aztechalf, rect)");
}

}  // namespace tilings
