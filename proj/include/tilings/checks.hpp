#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilings/count.hpp"
#include "tilings/enumerate.hpp"
#include "tilings/result_store.hpp"
#include "tilings/verdict.hpp"

namespace tilings {

// Counting context shared by the named checks: options plus optional cache.
struct Session {
  CountOptions options;
  ResultStore* store = nullptr;
  unsigned threads = 1;

  Count count(const Region& region, const TileSet& tiles);
  // Weighted counts over family_region(family, n) for n in [lo, hi].
  std::vector<Count> family_counts(Family family, const TileSet& tiles, int lo, int hi);
};

struct CheckParams {
  std::optional<int> max_n;
  std::optional<unsigned> k;
  std::optional<int> domino_max_n;
};

const std::vector<std::string>& check_names();

// Runs a named check. Throws ParseError for an unknown name or bad parameters.
Verdict run_named_check(const std::string& name, const CheckParams& params, Session& session);

}  // namespace tilings
