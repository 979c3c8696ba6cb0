#include <doctest.h>

#include <set>
#include <stdexcept>
#include <vector>

#include "itab/order_ideal.hpp"

using namespace itab;

TEST_CASE("order ideal construction") {
  OrderIdeal J(3, 4, {4, 2, 0});
  CHECK(J.box_rows() == 3);
  CHECK(J.box_cols() == 4);
  CHECK(J.profile() == std::vector<int>({4, 2}));  // trailing zeros trimmed
  CHECK(J.size() == 6);
  CHECK(J.row_len(0) == 4);
  CHECK(J.row_len(2) == 0);
  CHECK(J.contains(1, 1));
  CHECK_FALSE(J.contains(1, 2));
  CHECK_FALSE(J.contains(2, 0));

  CHECK(OrderIdeal::empty(3, 4).profile().empty());
  CHECK(OrderIdeal::empty(3, 4).size() == 0);
  CHECK(OrderIdeal::full(3, 4).profile() == std::vector<int>({4, 4, 4}));
  CHECK(OrderIdeal::full(3, 4).size() == 12);

  // Profiles must fit in the box and be weakly decreasing.
  CHECK_THROWS_AS(OrderIdeal(2, 2, {3}), std::invalid_argument);
  CHECK_THROWS_AS(OrderIdeal(2, 2, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(OrderIdeal(2, 2, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(OrderIdeal(2, 2, {-1}), std::invalid_argument);
}

TEST_CASE("rowmotion small cases") {
  // Empty ideal: the unique minimal element of the complement is the origin.
  CHECK(rowmotion(OrderIdeal::empty(2, 2)) == OrderIdeal(2, 2, {1}));
  // Full ideal: empty complement, so the result is empty.
  CHECK(rowmotion(OrderIdeal::full(2, 2)) == OrderIdeal::empty(2, 2));
  // Single-corner ideal of [2] x [2]: complement minima are (0,1) and (1,0).
  CHECK(rowmotion(OrderIdeal(2, 2, {1})) == OrderIdeal(2, 2, {2, 1}));
  CHECK(rowmotion(OrderIdeal(2, 2, {2, 1})) == OrderIdeal::full(2, 2));
}

TEST_CASE("rowmotion orbit of the empty ideal in [3] x [4]") {
  auto J = OrderIdeal::empty(3, 4);
  std::vector<OrderIdeal> orbit{J};
  for (;;) {
    J = rowmotion(J);
    if (J == orbit.front()) break;
    orbit.push_back(J);
    REQUIRE(orbit.size() <= 64);
  }
  CHECK(orbit.size() == 7);
  CHECK(orbit[1] == OrderIdeal(3, 4, {1}));
}

TEST_CASE("all order ideals") {
  auto ideals = all_order_ideals(3, 4);
  CHECK(ideals.size() == 35);  // binom(7,3)
  std::set<OrderIdeal> distinct(ideals.begin(), ideals.end());
  CHECK(distinct.size() == 35);
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    CHECK(ideals[i - 1] < ideals[i]);
  }
  CHECK(all_order_ideals(1, 1).size() == 2);
  CHECK(all_order_ideals(2, 2).size() == 6);

  // Rowmotion permutes the ideals of the box.
  std::set<OrderIdeal> images;
  for (const auto& J : ideals) images.insert(rowmotion(J));
  CHECK(images == distinct);
}

TEST_CASE("subset encoding of ideals") {
  CHECK(ideal_to_subset(OrderIdeal::empty(3, 4)) ==
        std::vector<int>({5, 6, 7}));
  CHECK(ideal_to_subset(OrderIdeal::full(3, 4)) == std::vector<int>({1, 2, 3}));
  CHECK(ideal_to_subset(OrderIdeal(3, 4, {4, 2})) ==
        std::vector<int>({1, 4, 7}));

  // Round trip across every ideal of [3] x [4].
  for (const auto& J : all_order_ideals(3, 4)) {
    auto s = ideal_to_subset(J);
    CHECK(static_cast<int>(s.size()) == 3);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i - 1] < s[i]);
    CHECK(subset_to_ideal(s, 3, 4) == J);
  }

  // Unsorted input is accepted.
  CHECK(subset_to_ideal({7, 5, 6}, 3, 4) == OrderIdeal::empty(3, 4));

  CHECK_THROWS_AS(subset_to_ideal({1, 2}, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(subset_to_ideal({1, 2, 8}, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(subset_to_ideal({0, 1, 2}, 3, 4), std::invalid_argument);
  CHECK_THROWS_AS(subset_to_ideal({2, 2, 3}, 3, 4), std::invalid_argument);
}
