#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tilings/count.hpp"
#include "tilings/enumerate.hpp"

namespace tilings {

// JSON file cache of exact counts keyed by (region descriptor, canonical tile
// set). Region descriptors such as "aztec:5" or "rect:4x6" carry the order.
// Safe for concurrent get/put within one process.
class ResultStore {
 public:
  static constexpr int kSchemaVersion = 1;

  struct Entry {
    std::string region;
    std::string tiles;
    Count count;
  };

  // Loads `path` if it exists. A file with another schema version is ignored
  // (and overwritten on save); a corrupt file throws std::runtime_error.
  explicit ResultStore(std::filesystem::path path);

  // $TILINGS_CACHE, else ./tilings-cache.json.
  static std::filesystem::path default_path();

  std::optional<Count> get(const std::string& region, const std::string& tiles) const;
  void put(const std::string& region, const std::string& tiles, const Count& count);

  // Writes to a temporary file and renames it into place.
  void save() const;

  std::vector<Entry> entries() const;
  std::size_t size() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, std::string>, Count> entries_;
};

// count_weighted through the store when one is given.
Count cached_count(const Region& region, const TileSet& tiles, const CountOptions& options,
                   ResultStore* store);

struct CacheCheck {
  std::size_t checked = 0;
  std::vector<ResultStore::Entry> mismatches;  // stored value; recomputation differs
};

// Recomputes up to `sample` entries, smallest regions first.
CacheCheck verify_store(const ResultStore& store, std::size_t sample, const CountOptions& options);

}  // namespace tilings
