#include "itab/verify.hpp"

#include <algorithm>
#include <set>

#include "itab/dynamics.hpp"
#include "itab/enumerate.hpp"
#include "itab/json_io.hpp"
#include "itab/qseries.hpp"

namespace itab {

namespace {

mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

void ensure_budget(const mpz_class& estimate, const ExecPolicy& policy,
                   const std::string& what) {
  if (estimate > static_cast<unsigned long>(policy.budget)) {
    throw BudgetError(what + " needs a ground set of " + estimate.get_str() +
                      " elements, over the budget of " +
                      std::to_string(policy.budget));
  }
}

nlohmann::ordered_json strings_json(const std::vector<mpz_class>& values) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& v : values) arr.push_back(v.get_str());
  return arr;
}

// Orbit-decompose the ground set under K-promotion and test the sieving
// condition for f against a cyclic group of order n.  Fills the shared
// statistics and, on failure, a witness; returns the verdict.
bool csp_claim(VerificationReport& report,
               std::vector<IncreasingTableau> ground, int n, const IntPoly& f,
               const ExecPolicy& policy) {
  (void)policy;
  OrbitDecomposition<IncreasingTableau> dec;
  try {
    dec = orbit_decomposition(std::move(ground), [](const IncreasingTableau& T) {
      return k_promote(T);
    });
  } catch (const std::invalid_argument& e) {
    report.pass = false;
    report.witness = {{"error", e.what()}};
    return false;
  }

  std::vector<std::size_t> lengths = dec.lengths();
  std::sort(lengths.begin(), lengths.end());

  report.statistics["ground_size"] = dec.total;
  report.statistics["cyclic_order"] = n;
  report.statistics["orbit_count"] = lengths.size();
  report.statistics["orbit_lengths"] = lengths;
  report.statistics["f_coefficients"] = poly_to_json(f);
  report.statistics["f_at_1"] = f(1).get_str();

  for (std::size_t l : lengths) {
    if (l == 0 || n % static_cast<int>(l) != 0) {
      report.pass = false;
      report.witness = {{"orbit_length", l}, {"cyclic_order", n}};
      return false;
    }
  }

  const auto fix = fixed_point_counts(lengths, n);
  report.statistics["fixed_point_counts"] = strings_json(fix);
  report.statistics["orbit_generating_function"] =
      poly_to_json(orbit_polynomial(lengths, n));

  const CspResult csp = csp_check(f, lengths, n);
  report.statistics["float_oracle_agrees"] = csp.float_oracle_agrees;
  report.pass = csp.pass;
  if (!csp.pass) {
    const int d = csp.first_failing_divisor;
    report.witness = {
        {"failing_divisor", d},
        {"fixed_points", fix[static_cast<std::size_t>((n / d) % n)].get_str()}};
  }
  return report.pass;
}

}  // namespace

VerificationReport verify_rectangle_csp(int a, int b,
                                        const ExecPolicy& policy) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("rectangle dimensions must be positive");
  }
  VerificationReport report;
  report.claim = "rectangle";
  report.parameters["a"] = a;
  report.parameters["b"] = b;
  ensure_budget(binom(static_cast<unsigned long>(a) + static_cast<unsigned long>(b),
                      static_cast<unsigned long>(a)),
                policy, "rectangle claim");
  auto ground = enumerate_increasing(Partition::rectangle(a, b), a + b,
                                     /*packed_only=*/false, policy.threads,
                                     policy.budget);
  csp_claim(report, std::move(ground), a + b, q_binomial(a + b, a), policy);
  return report;
}

VerificationReport verify_packed_decomposition(int a, int b,
                                               const ExecPolicy& policy) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("rectangle dimensions must be positive");
  }
  VerificationReport report;
  report.claim = "decomposition";
  report.parameters["a"] = a;
  report.parameters["b"] = b;
  ensure_budget(binom(static_cast<unsigned long>(a) + static_cast<unsigned long>(b),
                      static_cast<unsigned long>(a)),
                policy, "decomposition claim");

  const auto ground =
      enumerate_increasing(Partition::rectangle(a, b), a + b,
                           /*packed_only=*/false, policy.threads, policy.budget);
  std::vector<IncreasingTableau> packed;
  for (const auto& T : ground) {
    if (is_packed_to_bound(T)) packed.push_back(T);
  }
  const auto orbit = minimal_tableau_orbit(a, b);

  report.statistics["ground_size"] = ground.size();
  report.statistics["packed_count"] = packed.size();
  report.statistics["orbit_length"] = orbit.size();
  nlohmann::ordered_json orbit_json = nlohmann::ordered_json::array();
  for (const auto& T : orbit) orbit_json.push_back(tableau_to_json(T));
  report.statistics["orbit"] = orbit_json;

  report.pass = true;
  if (orbit.size() != static_cast<std::size_t>(a + b)) {
    report.pass = false;
    report.witness = {{"orbit_length", orbit.size()}, {"expected", a + b}};
    return report;
  }
  for (const auto& T : orbit) {
    if (is_packed_to_bound(T)) {
      report.pass = false;
      report.witness = {{"packed_orbit_member", tableau_to_json(T)}};
      return report;
    }
  }
  // The packed tableaux and the orbit must partition the ground set.
  std::vector<IncreasingTableau> merged = packed;
  merged.insert(merged.end(), orbit.begin(), orbit.end());
  std::sort(merged.begin(), merged.end());
  for (std::size_t i = 1; i < merged.size(); ++i) {
    if (merged[i - 1] == merged[i]) {
      report.pass = false;
      report.witness = {{"duplicated_element", tableau_to_json(merged[i])}};
      return report;
    }
  }
  if (merged.size() != ground.size() ||
      !std::equal(merged.begin(), merged.end(), ground.begin())) {
    // Find one concrete element on which the two sides differ.
    std::vector<IncreasingTableau> sorted_ground = ground;
    std::sort(sorted_ground.begin(), sorted_ground.end());
    std::vector<IncreasingTableau> diff;
    std::set_symmetric_difference(merged.begin(), merged.end(),
                                  sorted_ground.begin(), sorted_ground.end(),
                                  std::back_inserter(diff));
    report.pass = false;
    report.witness = {{"unmatched_element",
                       diff.empty() ? nlohmann::ordered_json()
                                    : tableau_to_json(diff.front())}};
  }
  return report;
}

VerificationReport verify_three_row_csp(int k, const ExecPolicy& policy) {
  if (k < 2) throw std::invalid_argument("three-row claim needs k >= 2");
  VerificationReport report;
  report.claim = "main";
  report.parameters["k"] = k;
  ensure_budget(binom(static_cast<unsigned long>(k) + 3, 3), policy,
                "three-row claim");

  auto packed = enumerate_increasing(Partition::rectangle(3, k), k + 3,
                                     /*packed_only=*/true, policy.threads,
                                     policy.budget);
  const mpz_class expected =
      binom(static_cast<unsigned long>(k) + 3, 3) - (k + 3);
  const std::uint64_t syt_count = count_increasing(
      two_column_shape(k + 1, 3), k + 4, /*packed_only=*/true, policy.threads);

  report.statistics["expected_count"] = expected.get_str();
  report.statistics["standard_tableau_count"] = syt_count;

  const bool counts_ok = mpz_class(static_cast<unsigned long>(packed.size())) == expected &&
                         mpz_class(static_cast<unsigned long>(syt_count)) == expected;

  const IntPoly f = q_hook_polynomial(two_column_shape(k + 1, 3));
  const bool csp_ok = csp_claim(report, std::move(packed), k + 3, f, policy);
  if (csp_ok && !counts_ok) {
    report.pass = false;
    report.witness = {{"expected_count", expected.get_str()},
                      {"standard_tableau_count", syt_count}};
  }
  return report;
}

VerificationReport verify_qhook_binomial_identity(int k_min, int k_max) {
  if (k_min < 2 || k_max < k_min) {
    throw std::invalid_argument("identity sweep needs 2 <= k_min <= k_max");
  }
  VerificationReport report;
  report.claim = "identity";
  report.parameters["k_min"] = k_min;
  report.parameters["k_max"] = k_max;
  report.pass = true;
  int checked = 0;
  for (int k = k_min; k <= k_max; ++k) {
    if (!qhook_binomial_identity(k)) {
      report.pass = false;
      report.witness = {{"k", k}};
      break;
    }
    ++checked;
  }
  report.statistics["checked"] = checked;
  if (report.pass) {
    const mpz_class last =
        q_hook_polynomial(two_column_shape(k_max + 1, 3))(1);
    report.statistics["f_at_1_for_k_max"] = last.get_str();
  }
  return report;
}

VerificationReport verify_syt_rectangle_csp(int a, int b,
                                            const ExecPolicy& policy) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("rectangle dimensions must be positive");
  }
  VerificationReport report;
  report.claim = "csp1";
  report.parameters["a"] = a;
  report.parameters["b"] = b;
  const IntPoly f = q_hook_polynomial(Partition::rectangle(a, b));
  ensure_budget(f(1), policy, "standard-tableau claim");
  auto ground = enumerate_increasing(Partition::rectangle(a, b), a * b,
                                     /*packed_only=*/true, policy.threads,
                                     policy.budget);
  csp_claim(report, std::move(ground), a * b, f, policy);
  return report;
}

VerificationReport verify_two_row_csp(int k, int m, const ExecPolicy& policy) {
  if (k < 1 || m < k + 1 || m > 2 * k) {
    throw std::invalid_argument("two-row claim needs k >= 1 and k+1 <= m <= 2k");
  }
  VerificationReport report;
  report.claim = "csp2";
  report.parameters["k"] = k;
  report.parameters["m"] = m;
  auto ground = enumerate_increasing(Partition::rectangle(2, k), m,
                                     /*packed_only=*/true, policy.threads,
                                     policy.budget);
  // Pennant shape (m-k, m-k, 1^(2k-m)).
  std::vector<int> parts{m - k, m - k};
  parts.insert(parts.end(), static_cast<std::size_t>(2 * k - m), 1);
  const IntPoly f = q_hook_polynomial(Partition(std::move(parts)));
  csp_claim(report, std::move(ground), m, f, policy);
  return report;
}

VerificationReport verify_hook_shape_csp(int r, int s, int m,
                                         const ExecPolicy& policy) {
  if (r < 1 || s < 0 || m - s < 1 || m - r + 1 < 1 || r + s - m < 0 || m < 2) {
    throw std::invalid_argument(
        "hook-shape claim needs r >= 1, s >= 0, max(r, s+1) <= m <= r+s, m >= 2");
  }
  VerificationReport report;
  report.claim = "csp3";
  report.parameters["r"] = r;
  report.parameters["s"] = s;
  report.parameters["m"] = m;
  auto ground = enumerate_increasing(hook_shape(r, s), m,
                                     /*packed_only=*/true, policy.threads,
                                     policy.budget);
  const IntPoly f = q_hook_polynomial(hook_shape(m - s, s)) *
                    q_hook_polynomial(hook_shape(m - r + 1, r + s - m));
  csp_claim(report, std::move(ground), m - 1, f, policy);
  return report;
}

VerificationReport verify_no_hook_sieving_4x4(int max_boxes,
                                              const ExecPolicy& policy) {
  if (max_boxes < 1) throw std::invalid_argument("max_boxes must be >= 1");
  VerificationReport report;
  report.claim = "no_hook_sieving_4x4";
  report.parameters["max_boxes"] = max_boxes;

  auto packed = enumerate_increasing(Partition::rectangle(4, 4), 8,
                                     /*packed_only=*/true, policy.threads,
                                     policy.budget);
  const auto dec = orbit_decomposition(
      std::move(packed), [](const IncreasingTableau& T) { return k_promote(T); });
  std::vector<std::size_t> lengths = dec.lengths();
  std::sort(lengths.begin(), lengths.end());
  const int n = 8;
  const mpz_class target = static_cast<unsigned long>(dec.total);

  report.statistics["ground_size"] = dec.total;
  report.statistics["cyclic_order"] = n;
  report.statistics["orbit_lengths"] = lengths;

  int scanned = 0;
  int candidates = 0;
  nlohmann::ordered_json candidate_shapes = nlohmann::ordered_json::array();
  report.pass = true;
  for (const auto& shape : partitions_up_to(max_boxes)) {
    ++scanned;
    const IntPoly f = q_hook_polynomial(shape);
    if (f(1) != target) continue;
    ++candidates;
    candidate_shapes.push_back(shape.parts());
    if (csp_check(f, lengths, n).pass) {
      report.pass = false;
      report.witness = {{"shape", shape.parts()}};
      break;
    }
  }
  report.statistics["shapes_scanned"] = scanned;
  report.statistics["candidates_at_target_count"] = candidates;
  report.statistics["candidate_shapes"] = candidate_shapes;
  report.statistics["target_count"] = target.get_str();
  if (candidates == 0) {
    report.notes.push_back(
        "no partition with at most " + std::to_string(max_boxes) +
        " cells has a hook polynomial reaching " + target.get_str() +
        " at q=1 (" + target.get_str() +
        " has a prime factor larger than the cell bound), so the sweep is "
        "vacuous at this scale");
  }
  return report;
}

}  // namespace itab
