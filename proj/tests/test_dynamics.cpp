#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "itab/dynamics.hpp"
#include "itab/enumerate.hpp"

using namespace itab;

namespace {

IncreasingTableau tab(std::vector<std::vector<int>> rows, int bound) {
  return IncreasingTableau::from_rows(std::move(rows), bound);
}

}  // namespace

TEST_CASE("promotion worked example, three-row shape") {
  auto T = tab({{1, 3, 4}, {2, 4, 6}, {4}}, 7);
  CHECK(k_promote(T) == tab({{1, 2, 3}, {3, 5, 7}, {7}}, 7));
}

TEST_CASE("promotion small cases") {
  CHECK(k_promote(tab({{1, 2}, {2, 3}}, 4)) == tab({{1, 2}, {2, 4}}, 4));
  CHECK(k_promote(tab({{1, 2}, {2, 4}}, 4)) == tab({{1, 3}, {3, 4}}, 4));
  CHECK(k_promote(tab({{1, 3}, {3, 4}}, 4)) == tab({{2, 3}, {3, 4}}, 4));
  // No entry equal to 1: the slide phase is empty and every entry drops by 1.
  CHECK(k_promote(tab({{2, 3}, {3, 4}}, 4)) == tab({{1, 2}, {2, 3}}, 4));
  CHECK(k_promote(tab({{1}}, 2)) == tab({{2}}, 2));
  CHECK(k_promote(tab({{2}}, 2)) == tab({{1}}, 2));
  // Empty tableau is a fixed point.
  CHECK(k_promote(tab({}, 0)) == tab({}, 0));
}

TEST_CASE("promotion powers") {
  auto T = tab({{1, 3, 4}, {2, 4, 6}, {4}}, 7);
  CHECK(k_promote_power(T, 0) == T);
  CHECK(k_promote_power(T, 1) == k_promote(T));
  CHECK(k_promote_power(T, 2) == k_promote(k_promote(T)));
  CHECK_THROWS_AS(k_promote_power(T, -1), std::invalid_argument);

  // Promotion has order a+b on the a x b family with bound a+b.
  auto M = minimal_tableau(3, 4);
  CHECK(k_promote_power(M, 7) == M);
}

TEST_CASE("minimal tableau and its orbit") {
  CHECK(minimal_tableau(2, 2) == tab({{1, 2}, {2, 3}}, 4));
  CHECK(minimal_tableau(3, 4) ==
        tab({{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}}, 7));
  CHECK_THROWS_AS(minimal_tableau(0, 2), std::invalid_argument);

  auto orbit22 = minimal_tableau_orbit(2, 2);
  REQUIRE(orbit22.size() == 4);
  CHECK(orbit22[0] == tab({{1, 2}, {2, 3}}, 4));
  CHECK(orbit22[1] == tab({{1, 2}, {2, 4}}, 4));
  CHECK(orbit22[2] == tab({{1, 3}, {3, 4}}, 4));
  CHECK(orbit22[3] == tab({{2, 3}, {3, 4}}, 4));

  // The 1 x 1 family: both singleton tableaux form one orbit of length
  // a+b = 2 (the family is closed even though neither element is packed).
  auto orbit11 = minimal_tableau_orbit(1, 1);
  REQUIRE(orbit11.size() == 2);
  CHECK(orbit11[0] == tab({{1}}, 2));
  CHECK(orbit11[1] == tab({{2}}, 2));
}

TEST_CASE("orbit of the minimal 3 x 4 tableau, all seven steps") {
  const std::vector<IncreasingTableau> expected = {
      tab({{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 6}}, 7),
      tab({{1, 2, 3, 4}, {2, 3, 4, 5}, {3, 4, 5, 7}}, 7),
      tab({{1, 2, 3, 4}, {2, 3, 4, 6}, {3, 4, 6, 7}}, 7),
      tab({{1, 2, 3, 5}, {2, 3, 5, 6}, {3, 5, 6, 7}}, 7),
      tab({{1, 2, 4, 5}, {2, 4, 5, 6}, {4, 5, 6, 7}}, 7),
      tab({{1, 3, 4, 5}, {3, 4, 5, 6}, {4, 5, 6, 7}}, 7),
      tab({{2, 3, 4, 5}, {3, 4, 5, 6}, {4, 5, 6, 7}}, 7),
  };
  auto orbit = minimal_tableau_orbit(3, 4);
  REQUIRE(orbit.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(orbit[i] == expected[i]);
  }
  CHECK(k_promote(orbit.back()) == orbit.front());
  // No orbit member is packed: each skips at least one value.
  for (const auto& T : orbit) CHECK_FALSE(is_packed_to_bound(T));
}

TEST_CASE("toggle basics") {
  auto T = tab({{1, 2}, {2, 3}}, 4);
  // Values 1/2 and 2/3 each form a single mixed component: fixed.
  CHECK(k_bk_toggle(T, 1) == T);
  CHECK(k_bk_toggle(T, 2) == T);
  // Value 3 sits alone, value 4 absent: the component flips to 4.
  CHECK(k_bk_toggle(T, 3) == tab({{1, 2}, {2, 4}}, 4));
  CHECK_THROWS_AS(k_bk_toggle(T, 0), std::invalid_argument);
  CHECK_THROWS_AS(k_bk_toggle(T, 4), std::invalid_argument);

  // Two separate single-valued components flip independently.
  auto U = tab({{1, 3}, {3, 4}}, 4);
  CHECK(k_bk_toggle(U, 1) == tab({{2, 3}, {3, 4}}, 4));
}

TEST_CASE("toggles are involutions") {
  for (const auto& T : enumerate_increasing(Partition::rectangle(3, 3), 5, false)) {
    for (int i = 1; i < 5; ++i) {
      CHECK(k_bk_toggle(k_bk_toggle(T, i), i) == T);
    }
  }
}

TEST_CASE("promotion as a toggle product") {
  for (const auto& T : enumerate_increasing(Partition::rectangle(2, 2), 4, false)) {
    CHECK(k_promote_toggles(T) == k_promote(T));
  }
  auto F = tab({{1, 3, 4}, {2, 4, 6}, {4}}, 7);
  CHECK(k_promote_toggles(F) == k_promote(F));
}

TEST_CASE("evacuation involution and conjugation") {
  // 3 rows, 2 columns, bound 5: binom(5,3) = 10 elements.
  auto ground = enumerate_increasing(Partition::rectangle(3, 2), 5, false);
  REQUIRE(ground.size() == 10);
  for (const auto& T : ground) {
    CHECK(k_evacuate(k_evacuate(T)) == T);
    // evac . promote = promote^(bound-1) . evac, i.e. evacuation conjugates
    // promotion to its inverse.
    CHECK(k_evacuate(k_promote(T)) == k_promote_power(k_evacuate(T), 4));
  }

  // Classical special case: evacuation fixes both standard 2 x 2 tableaux.
  auto A = tab({{1, 2}, {3, 4}}, 4);
  auto B = tab({{1, 3}, {2, 4}}, 4);
  CHECK(k_evacuate(A) == A);
  CHECK(k_evacuate(B) == B);
}

TEST_CASE("tableau/ideal correspondence") {
  // All-small tableau -> empty ideal; all-large -> full ideal.
  CHECK(tableau_to_ideal(minimal_tableau(3, 4)) == OrderIdeal::empty(3, 4));
  CHECK(tableau_to_ideal(tab({{2, 3, 4, 5}, {3, 4, 5, 6}, {4, 5, 6, 7}}, 7)) ==
        OrderIdeal::full(3, 4));

  // Worked 4 x 5 example.
  auto W = tab({{1, 2, 4, 5, 6},
                {2, 3, 5, 6, 7},
                {3, 5, 6, 7, 8},
                {5, 6, 7, 8, 9}},
               9);
  CHECK(tableau_to_ideal(W) == OrderIdeal(4, 5, {5, 4, 3, 3}));
  CHECK(ideal_to_tableau(OrderIdeal(4, 5, {5, 4, 3, 3})) == W);

  // Round trips in both directions over the full 3 x 4 family.
  for (const auto& T : enumerate_increasing(Partition::rectangle(3, 4), 7, false)) {
    CHECK(ideal_to_tableau(tableau_to_ideal(T)) == T);
  }
  for (const auto& J : all_order_ideals(3, 4)) {
    CHECK(tableau_to_ideal(ideal_to_tableau(J)) == J);
  }

  // Domain errors: wrong bound, non-rectangular shape.
  CHECK_THROWS_AS(tableau_to_ideal(tab({{1, 2}, {2, 3}}, 5)),
                  std::invalid_argument);
  CHECK_THROWS_AS(tableau_to_ideal(tab({{1, 2}, {2}}, 3)),
                  std::invalid_argument);
}

TEST_CASE("correspondence intertwines promotion and rowmotion") {
  for (auto [a, b] : {std::pair{2, 2}, std::pair{2, 3}}) {
    for (const auto& T :
         enumerate_increasing(Partition::rectangle(a, b), a + b, false)) {
      CHECK(tableau_to_ideal(k_promote(T)) == rowmotion(tableau_to_ideal(T)));
    }
  }
}
