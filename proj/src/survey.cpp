#include "tilings/survey.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "tilings/padic.hpp"

namespace tilings {
namespace {

bool residue_is(const Count& x, unsigned long modulus, unsigned long r) {
  return mpz_fdiv_ui(x.get_mpz_t(), modulus) == r;
}

std::string code_of(unsigned bits) {
  std::string code(6, '0');
  for (int i = 0; i < 6; ++i) {
    if (bits >> (5 - i) & 1) code[i] = '1';
  }
  return code;
}

}  // namespace

std::set<std::string> SurveyRow::tags() const {
  std::set<std::string> tags;
  if (counts.empty()) return tags;
  const auto all = [&](std::size_t from, unsigned long modulus, unsigned long r) {
    return std::all_of(counts.begin() + static_cast<std::ptrdiff_t>(from), counts.end(),
                       [&](const Count& c) { return residue_is(c, modulus, r); });
  };
  if (all(0, 2, 0)) tags.insert("all-even");
  if (all(0, 2, 1)) tags.insert("all-odd");
  if (all(0, 8, 0)) tags.insert("divisible-by-8");
  if (all(0, 4, 2)) tags.insert("residue-2-mod-4");
  if (counts.size() >= 2) {
    if (residue_is(counts[0], 2, 1) && all(1, 2, 0)) tags.insert("even-after-first");
    if (all(1, 8, 0)) tags.insert("divisible-by-8-after-first");
  }
  return tags;
}

std::vector<std::optional<unsigned>> SurveyRow::valuations() const {
  std::vector<std::optional<unsigned>> out;
  for (const Count& c : counts) {
    if (c == 0) {
      out.push_back(std::nullopt);
    } else {
      out.push_back(v2_split(c).v2);
    }
  }
  return out;
}

std::vector<SurveyRow> run_survey(int max_n, const SurveyOptions& options) {
  if (max_n < 1) throw std::invalid_argument("survey needs max_n >= 1");
  std::vector<SurveyRow> rows;
  std::vector<TileSet> sets;
  // Ascending bit patterns give codes in lexicographic order.
  for (unsigned bits = 1; bits < 64; ++bits) {
    rows.push_back({code_of(bits), std::vector<Count>(static_cast<std::size_t>(max_n))});
    sets.push_back(parse_tileset(rows.back().code));
  }

  // Largest orders first so the long jobs are not left for last.
  std::vector<std::pair<std::size_t, int>> jobs;
  for (int n = max_n; n >= 1; --n) {
    for (std::size_t i = 0; i < rows.size(); ++i) jobs.push_back({i, n});
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const auto [row, n] = jobs[j];
      try {
        rows[row].counts[static_cast<std::size_t>(n - 1)] =
            cached_count(aztec_diamond(n), sets[row], options.count, options.store);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

SurveyClaims SurveyClaims::published() {
  SurveyClaims c;
  c.all_even = {"001001", "001100", "001101", "011001", "011100", "011101", "100001",
                "100100", "100101", "101000", "101001", "101100", "101101", "110000",
                "110001", "110100", "110101", "111000", "111001", "111100", "111101"};
  c.even_after_first = {"001010", "001110", "011010", "011110"};
  c.divisible_by_8 = {"011100"};
  c.divisible_by_8_after_first = {"100001"};
  c.residue_2_mod_4 = {"110001"};
  c.all_odd = {"100010"};
  return c;
}

Verdict compare_to_claims(const std::vector<SurveyRow>& rows, const SurveyClaims& claims) {
  Verdict v;
  v.check = "survey";
  v.status = Status::holds_on_range;
  const std::size_t max_n = rows.empty() ? 0 : rows.front().counts.size();
  v.range_first = 1;
  v.range_last = static_cast<int>(max_n);
  v.parameters = {{"max_n", max_n}};
  if (max_n < 2) {
    v.status = Status::insufficient_data;
    return v;
  }

  // First index where the residue condition breaks, or -1.
  const auto first_break = [](const SurveyRow& row, std::size_t from, unsigned long modulus,
                              unsigned long r) -> int {
    for (std::size_t i = from; i < row.counts.size(); ++i) {
      if (!residue_is(row.counts[i], modulus, r)) return static_cast<int>(i);
    }
    return -1;
  };

  struct Claim {
    const std::vector<std::string>* codes;
    std::string tag;
  };
  const std::vector<Claim> list = {{&claims.all_even, "all-even"},
                                   {&claims.even_after_first, "even-after-first"},
                                   {&claims.divisible_by_8, "divisible-by-8"},
                                   {&claims.divisible_by_8_after_first, "divisible-by-8-after-first"},
                                   {&claims.residue_2_mod_4, "residue-2-mod-4"},
                                   {&claims.all_odd, "all-odd"}};

  nlohmann::json checked = nlohmann::json::object();
  for (const Claim& claim : list) {
    checked[claim.tag] = claim.codes->size();
    for (const std::string& code : *claim.codes) {
      const auto it = std::find_if(rows.begin(), rows.end(), [&](const SurveyRow& r) { return r.code == code; });
      if (it == rows.end()) {
        v.status = Status::fails;
        v.witness = nlohmann::json{{"code", code}, {"classification", claim.tag}, {"reason", "missing row"}};
        return v;
      }
      if (it->tags().count(claim.tag)) continue;

      int bad = -1;
      if (claim.tag == "all-even") bad = first_break(*it, 0, 2, 0);
      if (claim.tag == "all-odd") bad = first_break(*it, 0, 2, 1);
      if (claim.tag == "divisible-by-8") bad = first_break(*it, 0, 8, 0);
      if (claim.tag == "divisible-by-8-after-first") bad = first_break(*it, 1, 8, 0);
      if (claim.tag == "residue-2-mod-4") bad = first_break(*it, 0, 4, 2);
      if (claim.tag == "even-after-first") {
        bad = residue_is(it->counts[0], 2, 1) ? first_break(*it, 1, 2, 0) : 0;
      }
      v.status = Status::fails;
      v.witness = nlohmann::json{{"code", code},
                                 {"classification", claim.tag},
                                 {"n", bad + 1},
                                 {"count", to_decimal(it->counts[static_cast<std::size_t>(bad)])}};
      return v;
    }
  }

  // Codes carrying a listed tag without being listed; reported, not judged.
  nlohmann::json unlisted = nlohmann::json::object();
  for (const Claim& claim : list) {
    nlohmann::json extra = nlohmann::json::array();
    for (const SurveyRow& row : rows) {
      if (row.tags().count(claim.tag) &&
          std::find(claim.codes->begin(), claim.codes->end(), row.code) == claim.codes->end()) {
        extra.push_back(row.code);
      }
    }
    unlisted[claim.tag] = extra;
  }
  v.data = {{"claims_checked", checked}, {"unlisted_with_tag", unlisted}};
  return v;
}

nlohmann::json survey_to_json(const std::vector<SurveyRow>& rows) {
  nlohmann::json out = nlohmann::json::array();
  for (const SurveyRow& row : rows) {
    nlohmann::json counts = nlohmann::json::array();
    for (const Count& c : row.counts) counts.push_back(to_decimal(c));
    nlohmann::json j = {{"code", row.code}, {"counts", counts}, {"tags", row.tags()}};
    if (std::find(kValuationWatchCodes.begin(), kValuationWatchCodes.end(), row.code) !=
        kValuationWatchCodes.end()) {
      nlohmann::json v2 = nlohmann::json::array();
      for (const auto& v : row.valuations()) v2.push_back(v ? nlohmann::json(*v) : nlohmann::json(nullptr));
      j["v2"] = v2;
    }
    out.push_back(std::move(j));
  }
  return out;
}

std::string survey_to_text(const std::vector<SurveyRow>& rows) {
  std::ostringstream out;
  for (const SurveyRow& row : rows) {
    out << row.code << "  ";
    std::string tags;
    for (const std::string& t : row.tags()) tags += (tags.empty() ? "" : ",") + t;
    out << std::left << std::setw(48) << (tags.empty() ? "-" : tags) << std::right;
    for (std::size_t i = 0; i < row.counts.size(); ++i) out << (i ? "," : "") << to_decimal(row.counts[i]);
    if (std::find(kValuationWatchCodes.begin(), kValuationWatchCodes.end(), row.code) !=
        kValuationWatchCodes.end()) {
      out << "  v2=";
      const auto vals = row.valuations();
      for (std::size_t i = 0; i < vals.size(); ++i) {
        out << (i ? "," : "") << (vals[i] ? std::to_string(*vals[i]) : std::string("inf"));
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tilings
