#include "itab/order_ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace itab {

OrderIdeal::OrderIdeal(int box_rows, int box_cols, std::vector<int> profile)
    : a_(box_rows), b_(box_cols), profile_(std::move(profile)) {
  if (a_ < 0 || b_ < 0) {
    throw std::invalid_argument("box dimensions must be nonnegative");
  }
  if (static_cast<int>(profile_.size()) > a_) {
    throw std::invalid_argument("ideal profile has more rows than the box");
  }
  for (std::size_t i = 0; i < profile_.size(); ++i) {
    if (profile_[i] < 0 || profile_[i] > b_) {
      throw std::invalid_argument("ideal profile row outside [0, box_cols]");
    }
    if (i > 0 && profile_[i] > profile_[i - 1]) {
      throw std::invalid_argument("ideal profile must be weakly decreasing");
    }
  }
  while (!profile_.empty() && profile_.back() == 0) profile_.pop_back();
}

OrderIdeal OrderIdeal::empty(int a, int b) { return OrderIdeal(a, b, {}); }

OrderIdeal OrderIdeal::full(int a, int b) {
  return OrderIdeal(a, b, std::vector<int>(static_cast<std::size_t>(a), b));
}

int OrderIdeal::size() const {
  return std::accumulate(profile_.begin(), profile_.end(), 0);
}

std::string OrderIdeal::to_string() const {
  std::ostringstream out;
  out << '[' << a_ << "]x[" << b_ << "]:(";
  for (std::size_t i = 0; i < profile_.size(); ++i) {
    if (i) out << ',';
    out << profile_[i];
  }
  out << ')';
  return out.str();
}

OrderIdeal rowmotion(const OrderIdeal& J) {
  const int a = J.box_rows();
  const int b = J.box_cols();
  std::vector<int> next(static_cast<std::size_t>(a), 0);
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c < b; ++c) {
      const bool minimal_in_complement =
          !J.contains(r, c) && (r == 0 || J.contains(r - 1, c)) &&
          (c == 0 || J.contains(r, c - 1));
      if (!minimal_in_complement) continue;
      // Down-closure: every row above r gains the cells up to column c.
      for (int i = 0; i <= r; ++i) {
        next[static_cast<std::size_t>(i)] =
            std::max(next[static_cast<std::size_t>(i)], c + 1);
      }
    }
  }
  return OrderIdeal(a, b, std::move(next));
}

std::vector<int> ideal_to_subset(const OrderIdeal& J) {
  const int a = J.box_rows();
  const int b = J.box_cols();
  std::vector<int> subset(static_cast<std::size_t>(a));
  for (int i = 1; i <= a; ++i) {
    subset[static_cast<std::size_t>(i - 1)] = b - J.row_len(i - 1) + i;
  }
  return subset;  // strictly increasing because the profile weakly decreases
}

OrderIdeal subset_to_ideal(const std::vector<int>& subset, int a, int b) {
  if (static_cast<int>(subset.size()) != a) {
    throw std::invalid_argument("subset size must equal the box row count");
  }
  std::vector<int> sorted = subset;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 1 || sorted[i] > a + b) {
      throw std::invalid_argument("subset element outside [1, a+b]");
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      throw std::invalid_argument("subset elements must be distinct");
    }
  }
  std::vector<int> profile(static_cast<std::size_t>(a));
  for (int i = 1; i <= a; ++i) {
    profile[static_cast<std::size_t>(i - 1)] =
        b + i - sorted[static_cast<std::size_t>(i - 1)];
  }
  return OrderIdeal(a, b, std::move(profile));
}

namespace {

void emit_profiles(int rows_left, int max_len, std::vector<int>& acc, int a,
                   int b, std::vector<OrderIdeal>& out) {
  if (rows_left == 0) {
    out.emplace_back(a, b, acc);
    return;
  }
  for (int len = 0; len <= max_len; ++len) {
    acc.push_back(len);
    emit_profiles(rows_left - 1, len, acc, a, b, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<OrderIdeal> all_order_ideals(int a, int b) {
  if (a < 0 || b < 0) {
    throw std::invalid_argument("box dimensions must be nonnegative");
  }
  std::vector<OrderIdeal> out;
  std::vector<int> acc;
  emit_profiles(a, b, acc, a, b, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace itab
