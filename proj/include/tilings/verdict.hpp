#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tilings {

enum class Status { holds_on_range, fails, insufficient_data };

std::string status_name(Status s);

// Outcome of checking a claim on finitely many terms. `holds_on_range` is
// never a proof; `range` records the indices actually examined.
struct Verdict {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  int range_first = 0;
  int range_last = -1;
  Status status = Status::insufficient_data;
  std::optional<nlohmann::json> witness;  // always set when status == fails
  nlohmann::json data;                    // optional supporting values

  bool holds() const { return status == Status::holds_on_range; }
  nlohmann::json to_json() const;
};

// All-of combination: first failure wins, then insufficient data.
Verdict combine(std::string check, nlohmann::json parameters, const std::vector<Verdict>& parts);

}  // namespace tilings
