#include "itab/report.hpp"

#include <sstream>

namespace itab {

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["claim"] = claim;
  j["parameters"] = parameters;
  j["verdict"] = pass ? "pass" : "fail";
  j["witness"] = witness;
  j["statistics"] = statistics;
  j["notes"] = notes;
  return j;
}

namespace {

std::string scalar_text(const nlohmann::ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string VerificationReport::to_tsv() const {
  std::ostringstream out;
  out << "claim\t" << claim << '\n';
  for (const auto& [key, value] : parameters.items()) {
    out << "param." << key << '\t' << scalar_text(value) << '\n';
  }
  out << "verdict\t" << (pass ? "pass" : "fail") << '\n';
  if (!witness.is_null()) out << "witness\t" << witness.dump() << '\n';
  for (const auto& [key, value] : statistics.items()) {
    out << "stat." << key << '\t' << scalar_text(value) << '\n';
  }
  for (const auto& note : notes) out << "note\t" << note << '\n';
  return out.str();
}

}  // namespace itab
