#pragma once

#include <compare>
#include <string>
#include <vector>

#include "itab/partition.hpp"

namespace itab {

// Descent convention for increasing tableaux.  Under LowerRow, i is a descent
// of T when some occurrence of i+1 lies in a strictly lower row than some
// occurrence of i.  On standard tableaux this reduces to the classical notion.
enum class DescentConvention { LowerRow };

std::string to_string(DescentConvention conv);

// A filling of a partition diagram with entries in {1..bound} that increase
// strictly along every row and down every column.  Values may repeat across
// different rows/columns and need not cover {1..bound}.
class IncreasingTableau {
public:
  IncreasingTableau(Partition shape, std::vector<std::vector<int>> rows,
                    int bound);
  IncreasingTableau(Partition shape, std::vector<int> row_major, int bound);
  static IncreasingTableau from_rows(std::vector<std::vector<int>> rows,
                                     int bound);

  const Partition& shape() const { return shape_; }
  int bound() const { return bound_; }
  int cells() const { return static_cast<int>(entries_.size()); }
  // 0-based access; throws std::out_of_range outside the diagram.
  int at(int r, int c) const;
  const std::vector<int>& row_major() const { return entries_; }
  std::vector<std::vector<int>> rows() const;
  int max_entry() const;
  std::string to_string() const;

  friend bool operator==(const IncreasingTableau& x,
                         const IncreasingTableau& y) {
    return x.shape_ == y.shape_ && x.bound_ == y.bound_ &&
           x.entries_ == y.entries_;
  }
  friend std::strong_ordering operator<=>(const IncreasingTableau& x,
                                          const IncreasingTableau& y);

private:
  Partition shape_;
  std::vector<int> entries_;  // row-major
  std::vector<int> offsets_;  // offsets_[r] = index of (r, 0); size rows()+1
  int bound_ = 0;
};

// Whether `rows` is a strictly increasing filling of `shape`.  A shape/entry
// mismatch (wrong row count or row lengths) is malformed input and throws.
bool is_increasing(const Partition& shape,
                   const std::vector<std::vector<int>>& rows);

// Entry multiset covers {1..max_entry} with no gaps.
bool is_packed(const IncreasingTableau& T);

// Packed and the maximum entry equals the declared bound, i.e. membership in
// the packed family for that bound.
bool is_packed_to_bound(const IncreasingTableau& T);

std::vector<int> descent_set(const IncreasingTableau& T,
                             DescentConvention conv);
long long major_index(const IncreasingTableau& T, DescentConvention conv);

}  // namespace itab
