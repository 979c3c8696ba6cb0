#include "itab/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace itab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw std::invalid_argument("partition parts must be positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows < 0 || cols < 0) {
    throw std::invalid_argument("rectangle dimensions must be nonnegative");
  }
  if (rows == 0 || cols == 0) return Partition{};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::cells() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition{};
  std::vector<int> cols(static_cast<std::size_t>(parts_[0]), 0);
  for (int len : parts_) {
    for (int c = 0; c < len; ++c) ++cols[static_cast<std::size_t>(c)];
  }
  return Partition(std::move(cols));
}

bool Partition::is_rectangle() const {
  for (int len : parts_) {
    if (len != parts_[0]) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  out << ')';
  return out.str();
}

std::vector<std::vector<int>> hook_lengths(const Partition& shape) {
  const Partition conj = shape.conjugate();
  std::vector<std::vector<int>> hooks;
  hooks.reserve(static_cast<std::size_t>(shape.rows()));
  for (int r = 0; r < shape.rows(); ++r) {
    std::vector<int> row(static_cast<std::size_t>(shape.row_len(r)));
    for (int c = 0; c < shape.row_len(r); ++c) {
      const int arm = shape.row_len(r) - c - 1;
      const int leg = conj.row_len(c) - r - 1;
      row[static_cast<std::size_t>(c)] = arm + leg + 1;
    }
    hooks.push_back(std::move(row));
  }
  return hooks;
}

long long b_statistic(const Partition& shape) {
  long long b = 0;
  for (int r = 0; r < shape.rows(); ++r) {
    b += static_cast<long long>(r) * shape.row_len(r);
  }
  return b;
}

Partition two_column_shape(int left_height, int right_height) {
  if (right_height < 0 || left_height < right_height) {
    throw std::invalid_argument("column heights must satisfy left >= right >= 0");
  }
  std::vector<int> parts;
  parts.insert(parts.end(), static_cast<std::size_t>(right_height), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(left_height - right_height), 1);
  return Partition(std::move(parts));
}

Partition hook_shape(int arm, int leg) {
  if (arm < 1 || leg < 0) {
    throw std::invalid_argument("hook shape needs arm >= 1 and leg >= 0");
  }
  std::vector<int> parts{arm};
  parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
  return Partition(std::move(parts));
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& acc,
                     std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<int> acc;
  emit_partitions(n, n, acc, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_cells) {
  std::vector<Partition> out;
  for (int n = 1; n <= max_cells; ++n) {
    auto batch = partitions_of(n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace itab
