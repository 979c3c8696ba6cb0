#pragma once

#include <compare>
#include <string>
#include <vector>

namespace itab {

// Integer partition: a weakly decreasing sequence of positive parts.
// The empty partition is a valid value.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws std::invalid_argument
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  // Length of 0-based row r; 0 outside the diagram.
  int row_len(int r) const {
    return (r >= 0 && r < rows()) ? parts_[static_cast<std::size_t>(r)] : 0;
  }
  int cells() const;
  bool empty() const { return parts_.empty(); }
  // 0-based cell membership.
  bool contains(int r, int c) const { return c >= 0 && c < row_len(r); }
  Partition conjugate() const;
  std::vector<int> column_lengths() const { return conjugate().parts(); }
  bool is_rectangle() const;
  std::string to_string() const;  // e.g. "(3,2,2)"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&,
                                          const Partition&) = default;

private:
  std::vector<int> parts_;
};

// 1-based cell coordinates; (1,1) is the upper-left corner.
struct Cell {
  int row = 1;
  int col = 1;
};

// Hook length of every cell, row by row.
std::vector<std::vector<int>> hook_lengths(const Partition& shape);

// b(shape) = sum over rows of (row index - 1) * (row length).
long long b_statistic(const Partition& shape);

// The partition whose column lengths are (left_height, right_height),
// i.e. (2^right, 1^(left-right)) when left_height >= right_height.
Partition two_column_shape(int left_height, int right_height);

// The hook partition (arm, 1^leg): one row of length `arm`, then `leg`
// single-cell rows.
Partition hook_shape(int arm, int leg);

// All partitions of exactly n, in lexicographically decreasing order.
std::vector<Partition> partitions_of(int n);

// All nonempty partitions with 1..max_cells cells.
std::vector<Partition> partitions_up_to(int max_cells);

}  // namespace itab
