#pragma once

#include <compare>
#include <string>
#include <vector>

namespace itab {

// An order ideal (down-closed subset) of the grid poset [a] x [b], where
// (r, c) <= (r', c') iff r <= r' and c <= c'.  Stored as the weakly
// decreasing row-length profile of its staircase diagram inside the box;
// trailing zero rows are trimmed.
class OrderIdeal {
public:
  OrderIdeal(int box_rows, int box_cols, std::vector<int> profile);
  static OrderIdeal empty(int a, int b);
  static OrderIdeal full(int a, int b);

  int box_rows() const { return a_; }
  int box_cols() const { return b_; }
  const std::vector<int>& profile() const { return profile_; }
  // 0-based row length; 0 below the trimmed profile.
  int row_len(int r) const {
    return (r >= 0 && r < static_cast<int>(profile_.size()))
               ? profile_[static_cast<std::size_t>(r)]
               : 0;
  }
  // 0-based cell membership.
  bool contains(int r, int c) const { return c >= 0 && c < row_len(r); }
  int size() const;
  std::string to_string() const;

  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
  friend std::strong_ordering operator<=>(const OrderIdeal&,
                                          const OrderIdeal&) = default;

private:
  int a_ = 0;
  int b_ = 0;
  std::vector<int> profile_;
};

// The ideal generated by the minimal elements of the complement of J.
OrderIdeal rowmotion(const OrderIdeal& J);

// Encode an ideal of [a] x [b] as an a-element subset of {1..a+b}:
// element i of the sorted output is b - r_i + i where r_i is the i-th
// profile row length (padded with zeros).
std::vector<int> ideal_to_subset(const OrderIdeal& J);

// Inverse of ideal_to_subset; `subset` must hold a distinct values in
// [1, a+b] (any order).
OrderIdeal subset_to_ideal(const std::vector<int>& subset, int a, int b);

// All ideals of [a] x [b], sorted.
std::vector<OrderIdeal> all_order_ideals(int a, int b);

}  // namespace itab
