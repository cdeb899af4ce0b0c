#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "tilings/count.hpp"
#include "tilings/grid.hpp"
#include "tilings/tiles.hpp"

namespace tilings {

struct CountOptions {
  // Merge equal frontiers (the normal mode). When false, every tiling is
  // reached by plain depth-first search; only useful for cross-checks.
  bool memoize = true;
  // Hard cap on live frontier states; exceeding it throws ResourceError.
  std::size_t max_states = std::size_t{1} << 26;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  // Count in a transposed frame when that narrows the scan rows.
  bool allow_transpose = true;
};

struct CountStats {
  std::size_t window_bits = 0;  // frontier width, in cells
  std::size_t peak_states = 0;
  std::size_t transitions = 0;
  bool transposed = false;
  int limbs = 0;  // 0 when the big-integer fallback was used
};

// Sum over all tilings of `region` by translates of `tiles` of the product of
// tile weights. Empty region -> 1, untileable -> 0.
//
// Cells are visited in scan order; each step covers the first uncovered cell
// with every tile whose first cell (in scan order) can land there. The state
// carried between steps is the frontier key: the scan index plus occupancy of
// the window of later cells a placement can still reach, which spans
// (H-1) rows plus one row remainder for tiles at most H rows tall. Equal keys
// have equal completions, so frontiers are merged layer by layer.
Count count_weighted(const Region& region, const TileSet& tiles, const CountOptions& options = {},
                     CountStats* stats = nullptr);

// count_weighted with every weight forced to 1.
Count count_tilings(const Region& region, const TileSet& tiles, const CountOptions& options = {});

// count_tilings over family_region(family, n) for n in [n_min, n_max]. Indices
// may be computed concurrently on `threads` workers; results are in n order.
std::vector<Count> sequence(Family family, const TileSet& tiles, int n_min, int n_max,
                            const CountOptions& options = {}, unsigned threads = 1);

TileSet with_unit_weights(const TileSet& tiles);

}  // namespace tilings
