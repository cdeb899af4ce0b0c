#include "tilings/result_store.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tilings/errors.hpp"

namespace tilings {

ResultStore::ResultStore(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("cache file " + path_.string() + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || doc.value("schema", 0) != kSchemaVersion) return;
  for (const auto& e : doc.at("entries")) {
    entries_[{e.at("region").get<std::string>(), e.at("tiles").get<std::string>()}] =
        parse_count(e.at("count").get<std::string>());
  }
}

std::filesystem::path ResultStore::default_path() {
  if (const char* env = std::getenv("TILINGS_CACHE"); env && *env) return env;
  return "tilings-cache.json";
}

std::optional<Count> ResultStore::get(const std::string& region, const std::string& tiles) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find({region, tiles});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultStore::put(const std::string& region, const std::string& tiles, const Count& count) {
  std::lock_guard lock(mutex_);
  entries_[{region, tiles}] = count;
}

void ResultStore::save() const {
  nlohmann::json doc;
  doc["schema"] = kSchemaVersion;
  doc["entries"] = nlohmann::json::array();
  {
    std::lock_guard lock(mutex_);
    for (const auto& [key, count] : entries_) {
      doc["entries"].push_back({{"region", key.first}, {"tiles", key.second}, {"count", to_decimal(count)}});
    }
  }
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

std::vector<ResultStore::Entry> ResultStore::entries() const {
  std::lock_guard lock(mutex_);
  std::vector<Entry> out;
  for (const auto& [key, count] : entries_) out.push_back({key.first, key.second, count});
  return out;
}

std::size_t ResultStore::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

Count cached_count(const Region& region, const TileSet& tiles, const CountOptions& options,
                   ResultStore* store) {
  if (region.empty()) return 1;
  const std::string key = tiles.canonical();
  if (store) {
    if (auto hit = store->get(region.descriptor(), key)) return *hit;
  }
  Count value = count_weighted(region, tiles, options);
  if (store) store->put(region.descriptor(), key, value);
  return value;
}

CacheCheck verify_store(const ResultStore& store, std::size_t sample, const CountOptions& options) {
  struct Job {
    ResultStore::Entry entry;
    Region region;
  };
  std::vector<Job> jobs;
  for (auto& e : store.entries()) {
    Region r = parse_region(e.region);
    jobs.push_back({std::move(e), std::move(r)});
  }
  std::stable_sort(jobs.begin(), jobs.end(),
                   [](const Job& a, const Job& b) { return a.region.size() < b.region.size(); });

  CacheCheck result;
  for (const Job& job : jobs) {
    if (result.checked == sample) break;
    const Count fresh = count_weighted(job.region, parse_tileset(job.entry.tiles), options);
    ++result.checked;
    if (fresh != job.entry.count) result.mismatches.push_back(job.entry);
  }
  return result;
}

}  // namespace tilings
