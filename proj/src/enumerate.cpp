#include "tilings/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <thread>

#include "tilings/errors.hpp"

namespace tilings {
namespace {

using Clock = std::chrono::steady_clock;
using u128 = unsigned __int128;

// Fixed-width integer modulo 2^(64K). Tiling sums are computed in this ring;
// the limb count is picked so the exact result fits as a two's-complement
// value, which makes the wrapped intermediate sums harmless.
template <int K>
struct Wide {
  std::array<std::uint64_t, K> limb{};

  void add(const Wide& o) {
    unsigned char carry = 0;
    for (int i = 0; i < K; ++i) {
      const u128 s = static_cast<u128>(limb[i]) + o.limb[i] + carry;
      limb[i] = static_cast<std::uint64_t>(s);
      carry = static_cast<unsigned char>(s >> 64);
    }
  }

  void sub(const Wide& o) {
    unsigned char borrow = 0;
    for (int i = 0; i < K; ++i) {
      const std::uint64_t a = limb[i], b = o.limb[i];
      const std::uint64_t d = a - b - borrow;
      borrow = (a < b || (a == b && borrow)) ? 1 : 0;
      limb[i] = d;
    }
  }

  Wide times(std::uint64_t m) const {
    Wide r;
    std::uint64_t carry = 0;
    for (int i = 0; i < K; ++i) {
      const u128 p = static_cast<u128>(limb[i]) * m + carry;
      r.limb[i] = static_cast<std::uint64_t>(p);
      carry = static_cast<std::uint64_t>(p >> 64);
    }
    return r;
  }

  static Wide one() {
    Wide r;
    r.limb[0] = 1;
    return r;
  }

  Count to_count() const {
    Count value = 0;
    for (int i = K - 1; i >= 0; --i) {
      value <<= 64;
      value += static_cast<unsigned long>(limb[i]);
    }
    if (limb[K - 1] >> 63) {
      Count modulus = 1;
      modulus <<= 64 * K;
      value -= modulus;
    }
    return value;
  }
};

template <int K>
void add_scaled(Wide<K>& dst, const Wide<K>& src, long weight) {
  if (weight == 1) {
    dst.add(src);
  } else if (weight == -1) {
    dst.sub(src);
  } else if (weight > 0) {
    dst.add(src.times(static_cast<std::uint64_t>(weight)));
  } else {
    dst.sub(src.times(static_cast<std::uint64_t>(-(weight + 1)) + 1));
  }
}

void add_scaled(Count& dst, const Count& src, long weight) {
  if (weight == 1) {
    dst += src;
  } else if (weight > 0) {
    mpz_addmul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(weight));
  } else {
    mpz_submul_ui(dst.get_mpz_t(), src.get_mpz_t(), static_cast<unsigned long>(-(weight + 1)) + 1);
  }
}

template <int K>
Count to_count(const Wide<K>& w) { return w.to_count(); }
inline Count to_count(const Count& c) { return c; }

template <class Acc>
Acc unit() {
  if constexpr (std::is_same_v<Acc, Count>) {
    return Count(1);
  } else {
    return Acc::one();
  }
}

inline std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline std::uint64_t hash_key(std::uint64_t k) { return mix(k); }
inline std::uint64_t hash_key(u128 k) {
  return mix(static_cast<std::uint64_t>(k) ^ mix(static_cast<std::uint64_t>(k >> 64)));
}

// Frontier layer: dense key/value arrays plus an open-addressing index.
// Iteration order is insertion order, so results never depend on hashing.
template <class Key, class Acc>
class Layer {
 public:
  void clear() {
    keys_.clear();
    values_.clear();
    std::fill(slots_.begin(), slots_.end(), kEmpty);
  }

  void reserve_slots(std::size_t n) {
    std::size_t cap = 16;
    while (cap < 2 * n) cap <<= 1;
    if (cap > slots_.size()) rehash(cap);
  }

  void add(Key key, const Acc& value, long weight) {
    if (2 * (keys_.size() + 1) > slots_.size()) rehash(std::max<std::size_t>(16, slots_.size() * 2));
    const std::size_t mask = slots_.size() - 1;
    std::size_t slot = hash_key(key) & mask;
    while (true) {
      const std::uint32_t idx = slots_[slot];
      if (idx == kEmpty) {
        slots_[slot] = static_cast<std::uint32_t>(keys_.size());
        keys_.push_back(key);
        values_.emplace_back();
        add_scaled(values_.back(), value, weight);
        return;
      }
      if (keys_[idx] == key) {
        add_scaled(values_[idx], value, weight);
        return;
      }
      slot = (slot + 1) & mask;
    }
  }

  std::size_t size() const { return keys_.size(); }
  std::vector<Key>& keys() { return keys_; }
  std::vector<Acc>& values() { return values_; }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void rehash(std::size_t cap) {
    slots_.assign(cap, kEmpty);
    const std::size_t mask = cap - 1;
    for (std::uint32_t i = 0; i < keys_.size(); ++i) {
      std::size_t slot = hash_key(keys_[i]) & mask;
      while (slots_[slot] != kEmpty) slot = (slot + 1) & mask;
      slots_[slot] = i;
    }
  }

  std::vector<Key> keys_;
  std::vector<Acc> values_;
  std::vector<std::uint32_t> slots_;
};

// A tile shape in the scan frame: cell offsets relative to its first cell,
// linearized with the frame's row stride.
struct ScanTile {
  std::vector<int> deltas;  // ascending, deltas[0] == 0
  int min_dc = 0;
  int max_dc = 0;
  long weight = 1;
};

struct Frame {
  int width = 0;  // row stride
  int cells = 0;  // width * rows
  int window = 1;
  std::vector<char> blocked;  // size cells + window; outside region or past the end
  std::vector<ScanTile> tiles;
};

Frame build_frame(const Region& region, const TileSet& tiles) {
  Frame f;
  f.width = region.width();
  const int rows = region.height();
  f.cells = f.width * rows;

  int max_delta = 0;
  for (const WeightedTile& e : tiles.entries()) {
    const OrientedTile& t = e.tile;
    const int h = t.height();
    // Scan row of an offset: top row of the tile is scan row 0.
    std::vector<std::pair<int, int>> scan;  // (scan row, col)
    for (const Cell& c : t.offsets()) scan.push_back({h - 1 - c.row, c.col});
    std::sort(scan.begin(), scan.end());
    const auto [anchor_row, anchor_col] = scan.front();
    ScanTile st;
    st.weight = e.weight;
    for (const auto& [r, c] : scan) {
      const int dc = c - anchor_col;
      st.deltas.push_back((r - anchor_row) * f.width + dc);
      st.min_dc = std::min(st.min_dc, dc);
      st.max_dc = std::max(st.max_dc, dc);
    }
    max_delta = std::max(max_delta, st.deltas.back());
    f.tiles.push_back(std::move(st));
  }
  f.window = max_delta + 1;

  f.blocked.assign(static_cast<std::size_t>(f.cells + f.window), 1);
  for (const Cell& c : region.cells()) {
    const int idx = (region.max_row() - c.row) * f.width + (c.col - region.min_col());
    f.blocked[idx] = 0;
  }
  return f;
}

void check_deadline(const CountOptions& options) {
  if (options.deadline && Clock::now() > *options.deadline) {
    throw ResourceError("time limit exceeded while counting tilings");
  }
}

template <class Key, class Acc>
Count run_frontier(const Frame& f, const CountOptions& options, CountStats* stats) {
  const int W = f.width;
  const int L = f.window;
  const Key top_bit = Key{1} << (L - 1);

  // Per column, the tiles whose columns stay inside the frame, with masks.
  std::vector<std::vector<std::pair<Key, long>>> by_column(W);
  for (int c = 0; c < W; ++c) {
    for (const ScanTile& t : f.tiles) {
      if (c + t.min_dc < 0 || c + t.max_dc >= W) continue;
      Key mask = 0;
      for (int d : t.deltas) mask |= Key{1} << d;
      by_column[c].push_back({mask, t.weight});
    }
  }

  Key initial = 0;
  for (int i = 0; i < L; ++i) {
    if (f.blocked[i]) initial |= Key{1} << i;
  }

  Layer<Key, Acc> cur, next;
  cur.add(initial, unit<Acc>(), 1);
  std::size_t peak = 1, transitions = 0;

  for (int p = 0; p < f.cells; ++p) {
    check_deadline(options);
    const Key incoming = f.blocked[p + L] ? top_bit : Key{0};
    auto& keys = cur.keys();
    auto& values = cur.values();

    if (f.blocked[p]) {
      // Every state has this cell filled; shifting keeps keys distinct.
      // The index is rebuilt by clear() before the layer is written again.
      for (Key& k : keys) k = (k >> 1) | incoming;
      continue;
    }

    next.clear();
    next.reserve_slots(keys.size());
    const auto& placements = by_column[p % W];
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const Key k = keys[i];
      if (k & 1) {
        next.add((k >> 1) | incoming, values[i], 1);
        ++transitions;
        continue;
      }
      for (const auto& [mask, weight] : placements) {
        if (k & mask) continue;
        next.add(((k | mask) >> 1) | incoming, values[i], weight);
        ++transitions;
      }
      if ((i & 0xffff) == 0xffff) check_deadline(options);
    }
    if (next.size() > options.max_states) {
      throw ResourceError("frontier exceeded " + std::to_string(options.max_states) + " states");
    }
    peak = std::max(peak, next.size());
    std::swap(cur, next);
  }

  Count total = 0;
  for (const Acc& v : cur.values()) total += to_count(v);
  if (stats) {
    stats->window_bits = static_cast<std::size_t>(L);
    stats->peak_states = peak;
    stats->transitions = transitions;
  }
  return total;
}

template <class Key>
Count run_depth_first(const Frame& f, const CountOptions& options, int p, Key key,
                      std::size_t& visits) {
  const int L = f.window;
  const Key top_bit = Key{1} << (L - 1);
  while (p < f.cells && (key & 1)) {
    key = (key >> 1) | (f.blocked[p + L] ? top_bit : Key{0});
    ++p;
  }
  if (p == f.cells) return 1;
  if ((++visits & 0xfff) == 0) check_deadline(options);

  const Key incoming = f.blocked[p + L] ? top_bit : Key{0};
  const int col = p % f.width;
  Count total = 0;
  for (const ScanTile& t : f.tiles) {
    if (col + t.min_dc < 0 || col + t.max_dc >= f.width) continue;
    Key mask = 0;
    for (int d : t.deltas) mask |= Key{1} << d;
    if (key & mask) continue;
    const Count sub = run_depth_first<Key>(f, options, p + 1, ((key | mask) >> 1) | incoming, visits);
    add_scaled(total, sub, t.weight);
  }
  return total;
}

// Limbs needed so that (tiles * max|weight|)^(max tile count) fits signed.
int limbs_needed(const Region& region, const TileSet& tiles) {
  long max_weight = 1;
  std::size_t min_size = 4;
  for (const WeightedTile& e : tiles.entries()) {
    max_weight = std::max(max_weight, e.weight < 0 ? -e.weight : e.weight);
    min_size = std::min(min_size, e.tile.size());
  }
  Count base = static_cast<unsigned long>(tiles.size());
  base *= max_weight;
  Count bound;
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), region.size() / min_size);
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2) + 1;
  return static_cast<int>((bits + 63) / 64);
}

template <class Key>
Count dispatch_limbs(const Frame& f, int limbs, const CountOptions& options, CountStats* stats) {
  if (stats) stats->limbs = limbs <= 8 ? limbs : 0;
  switch (limbs) {
    case 1: return run_frontier<Key, Wide<1>>(f, options, stats);
    case 2: return run_frontier<Key, Wide<2>>(f, options, stats);
    case 3: return run_frontier<Key, Wide<3>>(f, options, stats);
    case 4: return run_frontier<Key, Wide<4>>(f, options, stats);
    case 5: case 6: return run_frontier<Key, Wide<6>>(f, options, stats);
    case 7: case 8: return run_frontier<Key, Wide<8>>(f, options, stats);
    default: return run_frontier<Key, Count>(f, options, stats);
  }
}

}  // namespace

Count count_weighted(const Region& region, const TileSet& tiles, const CountOptions& options,
                     CountStats* stats) {
  if (stats) *stats = CountStats{};
  if (region.empty()) return 1;
  if (tiles.empty()) return 0;

  std::size_t granularity = 0;
  for (const WeightedTile& e : tiles.entries()) granularity = std::gcd(granularity, e.tile.size());
  if (region.size() % granularity != 0) return 0;

  const Region* frame_region = &region;
  const TileSet* frame_tiles = &tiles;
  Region transposed_region;
  TileSet transposed_tiles;
  if (options.allow_transpose && region.height() != region.width()) {
    // Both are transposed together, which preserves the count for any tile set.
    transposed_region = region.transformed(Dihedral::transpose());
    transposed_tiles = tiles.transformed(Dihedral::transpose());
    if (build_frame(transposed_region, transposed_tiles).window < build_frame(region, tiles).window) {
      frame_region = &transposed_region;
      frame_tiles = &transposed_tiles;
      if (stats) stats->transposed = true;
    }
  }

  const Frame frame = build_frame(*frame_region, *frame_tiles);
  if (frame.window > 128) {
    throw ResourceError("frontier window of " + std::to_string(frame.window) +
                        " cells exceeds the 128-cell limit");
  }

  if (!options.memoize) {
    std::size_t visits = 0;
    if (stats) stats->window_bits = static_cast<std::size_t>(frame.window);
    if (frame.window <= 64) {
      std::uint64_t key = 0;
      for (int i = 0; i < frame.window; ++i) {
        if (frame.blocked[i]) key |= std::uint64_t{1} << i;
      }
      return run_depth_first<std::uint64_t>(frame, options, 0, key, visits);
    }
    u128 key = 0;
    for (int i = 0; i < frame.window; ++i) {
      if (frame.blocked[i]) key |= u128{1} << i;
    }
    return run_depth_first<u128>(frame, options, 0, key, visits);
  }

  const int limbs = limbs_needed(region, tiles);
  if (frame.window <= 64) return dispatch_limbs<std::uint64_t>(frame, limbs, options, stats);
  return dispatch_limbs<u128>(frame, limbs, options, stats);
}

TileSet with_unit_weights(const TileSet& tiles) {
  std::vector<WeightedTile> entries = tiles.entries();
  for (WeightedTile& e : entries) e.weight = 1;
  return TileSet(std::move(entries), tiles.descriptor());
}

Count count_tilings(const Region& region, const TileSet& tiles, const CountOptions& options) {
  return count_weighted(region, with_unit_weights(tiles), options);
}

std::vector<Count> sequence(Family family, const TileSet& tiles, int n_min, int n_max,
                            const CountOptions& options, unsigned threads) {
  if (n_min > n_max) throw std::invalid_argument("sequence: n_min > n_max");
  if (n_min < 0) throw std::invalid_argument("sequence: n_min must be nonnegative");
  const TileSet unit_tiles = with_unit_weights(tiles);
  const std::size_t count = static_cast<std::size_t>(n_max - n_min + 1);
  std::vector<Count> result(count);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));

  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      result[i] = count_weighted(family_region(family, n_min + static_cast<int>(i)), unit_tiles, options);
    }
    return result;
  }

  // Largest orders first so the slowest index starts immediately.
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t j; (j = next.fetch_add(1)) < count;) {
        const std::size_t i = count - 1 - j;
        try {
          result[i] = count_weighted(family_region(family, n_min + static_cast<int>(i)), unit_tiles, options);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return result;
}

}  // namespace tilings
