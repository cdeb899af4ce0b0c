#include "tilings/verdict.hpp"

namespace tilings {

std::string status_name(Status s) {
  switch (s) {
    case Status::holds_on_range: return "holds-on-range";
    case Status::fails: return "fails";
    case Status::insufficient_data: return "insufficient-data";
  }
  return "?";
}

nlohmann::json Verdict::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["parameters"] = parameters;
  j["range"] = {range_first, range_last};
  j["status"] = status_name(status);
  if (witness) j["witness"] = *witness;
  if (!data.is_null()) j["data"] = data;
  return j;
}

Verdict combine(std::string check, nlohmann::json parameters, const std::vector<Verdict>& parts) {
  Verdict v;
  v.check = std::move(check);
  v.parameters = std::move(parameters);
  v.status = Status::holds_on_range;
  bool first = true;
  nlohmann::json details = nlohmann::json::array();
  for (const Verdict& p : parts) {
    if (first || p.range_first < v.range_first) v.range_first = p.range_first;
    if (first || p.range_last > v.range_last) v.range_last = p.range_last;
    first = false;
    details.push_back(p.to_json());
    if (v.status == Status::fails) continue;
    if (p.status == Status::fails) {
      v.status = Status::fails;
      v.witness = nlohmann::json{{"part", p.check}, {"parameters", p.parameters}, {"witness", *p.witness}};
    } else if (p.status == Status::insufficient_data) {
      v.status = Status::insufficient_data;
    }
  }
  if (parts.empty()) v.status = Status::insufficient_data;
  v.data = {{"parts", details}};
  return v;
}

}  // namespace tilings
