#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "itab/tableau.hpp"

using namespace itab;

TEST_CASE("tableau construction and access") {
  auto T = IncreasingTableau::from_rows({{1, 3, 4}, {2, 4, 6}, {4}}, 7);
  CHECK(T.shape() == Partition({3, 3, 1}));
  CHECK(T.bound() == 7);
  CHECK(T.cells() == 7);
  CHECK(T.at(0, 0) == 1);
  CHECK(T.at(1, 2) == 6);
  CHECK(T.at(2, 0) == 4);
  CHECK(T.max_entry() == 6);
  CHECK(T.row_major() == std::vector<int>({1, 3, 4, 2, 4, 6, 4}));
  CHECK(T.rows() == std::vector<std::vector<int>>({{1, 3, 4}, {2, 4, 6}, {4}}));
  CHECK_THROWS_AS(T.at(0, 3), std::out_of_range);
  CHECK_THROWS_AS(T.at(2, 1), std::out_of_range);
  CHECK_THROWS_AS(T.at(3, 0), std::out_of_range);

  // Row-major constructor agrees with the row-of-rows one.
  IncreasingTableau U(Partition({3, 3, 1}), std::vector<int>{1, 3, 4, 2, 4, 6, 4}, 7);
  CHECK(T == U);
}

TEST_CASE("tableau validation") {
  // Weak row increase rejected.
  CHECK_THROWS_AS(IncreasingTableau::from_rows({{1, 1}}, 2),
                  std::invalid_argument);
  // Weak column increase rejected.
  CHECK_THROWS_AS(IncreasingTableau::from_rows({{1, 2}, {1, 3}}, 3),
                  std::invalid_argument);
  // Entry above bound.
  CHECK_THROWS_AS(IncreasingTableau::from_rows({{1, 5}}, 4),
                  std::invalid_argument);
  // Entry below 1.
  CHECK_THROWS_AS(IncreasingTableau::from_rows({{0, 1}}, 4),
                  std::invalid_argument);
  // Row lengths not a partition.
  CHECK_THROWS_AS(IncreasingTableau::from_rows({{1}, {1, 2}}, 4),
                  std::invalid_argument);
  // Shape/entry mismatch via the explicit-shape constructor.
  CHECK_THROWS_AS(IncreasingTableau(Partition({2, 2}),
                                    std::vector<std::vector<int>>{{1, 2}}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(IncreasingTableau(Partition({2}), std::vector<int>{1}, 3),
                  std::invalid_argument);

  // Repeats in distinct rows and columns are fine.
  CHECK_NOTHROW(IncreasingTableau::from_rows({{1, 2}, {2, 3}}, 3));
  // Empty tableau is fine.
  CHECK_NOTHROW(IncreasingTableau::from_rows({}, 0));
}

TEST_CASE("is_increasing predicate") {
  CHECK(is_increasing(Partition({3, 2}), {{1, 2, 5}, {2, 3}}));
  CHECK(is_increasing(Partition({3, 3, 1}), {{1, 3, 4}, {2, 4, 6}, {4}}));
  CHECK_FALSE(is_increasing(Partition({2}), {{1, 1}}));
  CHECK_FALSE(is_increasing(Partition({2, 2}), {{1, 2}, {1, 3}}));
  CHECK_THROWS_AS(is_increasing(Partition({2, 2}), {{1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_increasing(Partition({2}), {{1, 2, 3}}),
                  std::invalid_argument);
}

TEST_CASE("packedness") {
  CHECK(is_packed(IncreasingTableau::from_rows({{1, 2, 4}, {2, 3}}, 4)));
  CHECK_FALSE(is_packed(IncreasingTableau::from_rows({{1, 2}, {2, 4}}, 4)));
  CHECK(is_packed(IncreasingTableau::from_rows({{1}}, 1)));

  // Packed but max entry below the declared bound.
  auto T = IncreasingTableau::from_rows({{1, 2}, {2, 3}}, 4);
  CHECK(is_packed(T));
  CHECK_FALSE(is_packed_to_bound(T));
  auto U = IncreasingTableau::from_rows({{1, 2}, {2, 3}}, 3);
  CHECK(is_packed_to_bound(U));

  // The empty tableau is vacuously packed.
  CHECK(is_packed(IncreasingTableau::from_rows({}, 0)));
}

TEST_CASE("descents and major index") {
  const auto conv = DescentConvention::LowerRow;
  CHECK(to_string(conv) == "LOWER_ROW");

  auto A = IncreasingTableau::from_rows({{1, 2}, {3, 4}}, 4);
  CHECK(descent_set(A, conv) == std::vector<int>({2}));
  CHECK(major_index(A, conv) == 2);

  auto B = IncreasingTableau::from_rows({{1, 3}, {2, 4}}, 4);
  CHECK(descent_set(B, conv) == std::vector<int>({1, 3}));
  CHECK(major_index(B, conv) == 4);

  auto C = IncreasingTableau::from_rows({{1, 2}, {2, 3}}, 3);
  CHECK(descent_set(C, conv) == std::vector<int>({1, 2}));
  CHECK(major_index(C, conv) == 3);

  auto D = IncreasingTableau::from_rows({{1, 2, 3}}, 3);
  CHECK(descent_set(D, conv).empty());
  CHECK(major_index(D, conv) == 0);

  // A value that never occurs cannot make a descent in either direction.
  auto E = IncreasingTableau::from_rows({{1, 3}}, 3);
  CHECK(descent_set(E, conv).empty());

  // In an increasing-but-not-standard tableau a value can sit both above and
  // below the next one; the lowest occurrence decides.
  auto F = IncreasingTableau::from_rows({{1, 2, 4}, {2, 3, 5}, {4, 5, 6}}, 6);
  CHECK(descent_set(F, conv) == std::vector<int>({1, 2, 3, 4, 5}));
  CHECK(major_index(F, conv) == 15);
}

TEST_CASE("tableau ordering") {
  auto A = IncreasingTableau::from_rows({{1, 2}, {2, 3}}, 4);
  auto B = IncreasingTableau::from_rows({{1, 2}, {2, 4}}, 4);
  auto C = IncreasingTableau::from_rows({{1, 2}, {2, 3}}, 4);
  CHECK(A == C);
  CHECK(A != B);
  CHECK(A < B);
  CHECK_FALSE(B < A);
}
