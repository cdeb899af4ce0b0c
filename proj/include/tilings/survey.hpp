#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tilings/count.hpp"
#include "tilings/enumerate.hpp"
#include "tilings/result_store.hpp"
#include "tilings/verdict.hpp"

namespace tilings {

inline constexpr int kDefaultSurveyMaxN = 6;

// Codes whose 2-adic valuation is reported raw rather than classified.
inline const std::vector<std::string> kValuationWatchCodes = {"001101", "100001", "100011", "111000"};

struct SurveyRow {
  std::string code;
  std::vector<Count> counts;  // Aztec orders 1..N

  // Recomputed from counts on every call: all-even, all-odd, even-after-first,
  // divisible-by-8, divisible-by-8-after-first, residue-2-mod-4.
  std::set<std::string> tags() const;
  // v2 of each count; nullopt for zero counts.
  std::vector<std::optional<unsigned>> valuations() const;
};

struct SurveyOptions {
  CountOptions count;
  ResultStore* store = nullptr;
  unsigned threads = 1;
};

// One row per nonzero six-bit code, ordered by code.
std::vector<SurveyRow> run_survey(int max_n, const SurveyOptions& options = {});

// The published classifications, checked against rows.
struct SurveyClaims {
  std::vector<std::string> all_even;
  std::vector<std::string> even_after_first;
  std::vector<std::string> divisible_by_8;
  std::vector<std::string> divisible_by_8_after_first;
  std::vector<std::string> residue_2_mod_4;
  std::vector<std::string> all_odd;

  static SurveyClaims published();
};

Verdict compare_to_claims(const std::vector<SurveyRow>& rows,
                         const SurveyClaims& claims = SurveyClaims::published());

nlohmann::json survey_to_json(const std::vector<SurveyRow>& rows);
std::string survey_to_text(const std::vector<SurveyRow>& rows);

}  // namespace tilings
