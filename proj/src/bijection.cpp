#include "itab/bijection.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "itab/dynamics.hpp"
#include "itab/enumerate.hpp"
#include "itab/json_io.hpp"
#include "itab/order_ideal.hpp"

namespace itab {

Partition two_column_tail_shape(int k) {
  if (k < 2) throw std::invalid_argument("two-column tail shape needs k >= 2");
  return two_column_shape(k + 1, 3);
}

std::array<int, 3> second_column_entries(const IncreasingTableau& T, int k) {
  if (T.shape() != two_column_tail_shape(k)) {
    throw std::invalid_argument("tableau does not have the two-column tail shape");
  }
  if (T.bound() != k + 4 || !is_packed_to_bound(T)) {
    throw std::invalid_argument("tableau is not standard (needs entries exactly 1..k+4)");
  }
  return {T.at(0, 1), T.at(1, 1), T.at(2, 1)};
}

IncreasingTableau syt_from_second_column(const std::array<int, 3>& triple,
                                         int k) {
  const Partition shape = two_column_tail_shape(k);
  const int n = k + 4;
  std::vector<char> in_second(static_cast<std::size_t>(n) + 1, 0);
  for (int v : triple) {
    if (v < 2 || v > n) {
      throw std::invalid_argument("second-column entry outside [2, k+4]");
    }
    in_second[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<int> first_column;
  for (int v = 1; v <= n; ++v) {
    if (!in_second[static_cast<std::size_t>(v)]) first_column.push_back(v);
  }
  if (first_column.size() != static_cast<std::size_t>(k) + 1) {
    throw std::invalid_argument("second-column entries must be distinct");
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(k) + 1);
  for (int r = 0; r <= k; ++r) {
    std::vector<int> row{first_column[static_cast<std::size_t>(r)]};
    if (r < 3) row.push_back(triple[static_cast<std::size_t>(r)]);
    rows.push_back(std::move(row));
  }
  return IncreasingTableau(shape, std::move(rows), n);  // throws if unrealizable
}

std::vector<std::array<int, 3>> unrealizable_second_columns(int k) {
  if (k < 2) throw std::invalid_argument("unrealizable_second_columns needs k >= 2");
  std::vector<std::array<int, 3>> out;
  for (int j = 4; j <= k + 4; ++j) out.push_back({2, 3, j});
  out.push_back({2, 4, 5});
  out.push_back({3, 4, 5});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::array<int, 3> to_triple(const std::vector<int>& v) {
  if (v.size() != 3) throw std::logic_error("expected a 3-element subset");
  return {v[0], v[1], v[2]};
}

// Patch permutation of the 3-subsets of {1..k+3}: pair the subsets coming
// from the non-packed orbit (blocked on the domain side) with the
// decremented unrealizable second columns (blocked on the image side), in
// sorted order, and pair the leftover members of each difference likewise.
// Identity elsewhere.  Restricted to subsets of packed tableaux this sends
// the complement of the blocked domain subsets onto the complement of the
// blocked image subsets.
std::map<std::array<int, 3>, std::array<int, 3>> patch_permutation(
    const std::vector<std::array<int, 3>>& blocked_domain,
    const std::vector<std::array<int, 3>>& blocked_image) {
  std::map<std::array<int, 3>, std::array<int, 3>> sigma;
  for (std::size_t i = 0; i < blocked_domain.size(); ++i) {
    sigma[blocked_domain[i]] = blocked_image[i];
  }
  std::vector<std::array<int, 3>> only_image, only_domain;
  std::set_difference(blocked_image.begin(), blocked_image.end(),
                      blocked_domain.begin(), blocked_domain.end(),
                      std::back_inserter(only_image));
  std::set_difference(blocked_domain.begin(), blocked_domain.end(),
                      blocked_image.begin(), blocked_image.end(),
                      std::back_inserter(only_domain));
  for (std::size_t i = 0; i < only_image.size(); ++i) {
    sigma[only_image[i]] = only_domain[i];
  }
  return sigma;
}

}  // namespace

BijectionTable build_explicit_bijection(int k, const ExecPolicy& policy) {
  if (k < 2) throw std::invalid_argument("build_explicit_bijection needs k >= 2");
  mpz_class total;
  mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(k) + 3, 3);
  if (total > static_cast<unsigned long>(policy.budget)) {
    throw BudgetError("bijection ground set of " + total.get_str() +
                      " exceeds the budget of " + std::to_string(policy.budget));
  }

  const int m = k + 3;
  const auto domain =
      enumerate_increasing(Partition::rectangle(3, k), m, /*packed_only=*/true,
                           policy.threads);

  // Subsets blocked on the domain side: images of the non-packed orbit.
  std::vector<std::array<int, 3>> blocked_domain;
  for (const auto& T : minimal_tableau_orbit(3, k)) {
    blocked_domain.push_back(to_triple(ideal_to_subset(tableau_to_ideal(T))));
  }
  std::sort(blocked_domain.begin(), blocked_domain.end());

  // Subsets blocked on the image side: unrealizable second columns, shifted
  // down into {1..k+3}.
  std::vector<std::array<int, 3>> blocked_image;
  for (auto triple : unrealizable_second_columns(k)) {
    for (int& v : triple) --v;
    blocked_image.push_back(triple);
  }
  std::sort(blocked_image.begin(), blocked_image.end());

  if (blocked_domain.size() != blocked_image.size()) {
    throw std::logic_error("blocked subset families have different sizes");
  }
  const auto sigma = patch_permutation(blocked_domain, blocked_image);

  BijectionTable table;
  table.domain_label = "packed increasing 3x" + std::to_string(k) +
                       " tableaux, bound " + std::to_string(m);
  table.codomain_label = "standard Young tableaux of shape (2,2,2,1^" +
                         std::to_string(k - 2) + ")";
  table.patch_size = static_cast<int>(blocked_domain.size());
  table.pairs.reserve(domain.size());
  for (const auto& T : domain) {
    auto subset = to_triple(ideal_to_subset(tableau_to_ideal(T)));
    if (auto it = sigma.find(subset); it != sigma.end()) subset = it->second;
    for (int& v : subset) ++v;
    table.pairs.emplace_back(T, syt_from_second_column(subset, k));
  }

  // Confirm the table really is a bijection onto the standard tableaux.
  std::set<IncreasingTableau> images;
  for (const auto& [from, to] : table.pairs) images.insert(to);
  if (images.size() != table.pairs.size()) {
    throw std::logic_error("bijection table is not injective");
  }
  const auto codomain = enumerate_syt(two_column_tail_shape(k));
  if (images.size() != codomain.size() ||
      !std::all_of(codomain.begin(), codomain.end(),
                   [&](const IncreasingTableau& T) { return images.count(T) > 0; })) {
    throw std::logic_error("bijection table does not cover the codomain");
  }
  return table;
}

VerificationReport bijection_obstruction_report(int k,
                                                const ExecPolicy& policy) {
  if (k < 2) throw std::invalid_argument("bijection_obstruction_report needs k >= 2");
  mpz_class total;
  mpz_bin_uiui(total.get_mpz_t(), static_cast<unsigned long>(k) + 3, 3);
  if (total > static_cast<unsigned long>(policy.budget)) {
    throw BudgetError("obstruction ground set of " + total.get_str() +
                      " exceeds the budget of " + std::to_string(policy.budget));
  }

  const auto conv = DescentConvention::LowerRow;
  const auto packed =
      enumerate_increasing(Partition::rectangle(3, k), k + 3,
                           /*packed_only=*/true, policy.threads);
  const auto standard = enumerate_syt(two_column_tail_shape(k));

  auto maj_histogram = [&](const std::vector<IncreasingTableau>& tabs) {
    std::map<long long, long long> hist;
    for (const auto& T : tabs) ++hist[major_index(T, conv)];
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [maj, count] : hist) rows.push_back({maj, count});
    return rows;
  };
  auto evacuation_fixed = [](const std::vector<IncreasingTableau>& tabs) {
    long long fixed = 0;
    for (const auto& T : tabs) {
      if (k_evacuate(T) == T) ++fixed;
    }
    return fixed;
  };

  const auto packed_maj = maj_histogram(packed);
  const auto standard_maj = maj_histogram(standard);
  const long long packed_evac = evacuation_fixed(packed);
  const long long standard_evac = evacuation_fixed(standard);
  const bool maj_equal = packed_maj == standard_maj;
  const bool evac_equal = packed_evac == standard_evac;

  VerificationReport report;
  report.claim = "obstructions";
  report.parameters["k"] = k;
  report.pass = packed.size() == standard.size();
  if (!report.pass) {
    report.witness = {{"packed_count", packed.size()},
                      {"standard_count", standard.size()}};
  }
  report.statistics["set_size"] = packed.size();
  report.statistics["descent_convention"] = to_string(conv);
  report.statistics["packed_maj_histogram"] = packed_maj;
  report.statistics["standard_maj_histogram"] = standard_maj;
  report.statistics["maj_multisets_equal"] = maj_equal;
  report.statistics["maj_obstruction_present"] = !maj_equal;
  report.statistics["packed_evacuation_fixed"] = packed_evac;
  report.statistics["standard_evacuation_fixed"] = standard_evac;
  report.statistics["evacuation_fixed_counts_equal"] = evac_equal;
  report.statistics["evacuation_obstruction_present"] = !evac_equal;
  if (maj_equal) {
    report.notes.push_back(
        "flagged for review: major-index multisets agree at k=" +
        std::to_string(k));
  }
  if (evac_equal) {
    report.notes.push_back(
        "flagged for review: evacuation fixed-point counts agree at k=" +
        std::to_string(k));
  }
  return report;
}

}  // namespace itab
