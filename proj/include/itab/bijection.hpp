#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "itab/report.hpp"
#include "itab/tableau.hpp"

namespace itab {

// Shape (2,2,2,1^(k-2)): column lengths (k+1, 3), with k+4 cells.
Partition two_column_tail_shape(int k);

// The second-column entries (rows 1..3) of a standard Young tableau of
// two_column_tail_shape(k).
std::array<int, 3> second_column_entries(const IncreasingTableau& T, int k);

// Rebuild the unique standard Young tableau of two_column_tail_shape(k)
// whose second column reads bottom-up as the given increasing triple; the
// first column takes the complementary values in order.  Throws when the
// triple is not realizable.
IncreasingTableau syt_from_second_column(const std::array<int, 3>& triple,
                                         int k);

// The k+3 increasing triples from {2..k+4} that occur as the second column
// of no standard Young tableau of two_column_tail_shape(k):
// {2,3,j} for j = 4..k+4, plus {2,4,5} and {3,4,5}.  Sorted.
std::vector<std::array<int, 3>> unrealizable_second_columns(int k);

struct BijectionTable {
  std::string domain_label;
  std::string codomain_label;
  int patch_size = 0;  // exceptional triples handled per side
  // (domain element, image), in domain enumeration order.
  std::vector<std::pair<IncreasingTableau, IncreasingTableau>> pairs;
};

// Explicit bijection from the packed 3 x k rectangular tableaux with bound
// k+3 onto the standard Young tableaux of two_column_tail_shape(k).  Each
// tableau is sent through the order-ideal correspondence to a 3-element
// subset of {1..k+3}; a fixed patch permutation swaps the subsets blocked on
// either side; the shifted subset then names a second column.  Verified
// bijective before returning.
BijectionTable build_explicit_bijection(int k, const ExecPolicy& policy = {});

// Compare the two sides of the correspondence as statistic-carrying sets:
// major-index multisets (stated convention) and the fixed-point counts of
// the evacuation involutions.  The report records whether each comparison
// differs; an agreeing comparison is flagged in `notes` for review.
VerificationReport bijection_obstruction_report(int k,
                                                const ExecPolicy& policy = {});

}  // namespace itab
