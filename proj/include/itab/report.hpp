#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace itab {

// Resource limits shared by the verification drivers.
struct ExecPolicy {
  unsigned long long budget = 1'000'000;  // maximum ground-set size
  int threads = 1;
};

// Verdict of one verification claim.  Field values are deterministic for
// fixed inputs so serialized reports are byte-stable.
struct VerificationReport {
  std::string claim;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  bool pass = false;
  // Null on pass; on failure, a concrete finite refutation (offending
  // element, divisor, or counterexample parameters).
  nlohmann::ordered_json witness;
  nlohmann::ordered_json statistics = nlohmann::ordered_json::object();
  std::vector<std::string> notes;

  nlohmann::ordered_json to_json() const;
  std::string to_tsv() const;
};

}  // namespace itab
