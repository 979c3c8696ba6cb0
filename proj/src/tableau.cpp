#include "itab/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace itab {

std::string to_string(DescentConvention conv) {
  switch (conv) {
    case DescentConvention::LowerRow:
      return "LOWER_ROW";
  }
  throw std::logic_error("unknown descent convention");
}

namespace {

std::vector<int> flatten(const Partition& shape,
                         const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != shape.rows()) {
    throw std::invalid_argument("tableau row count does not match shape");
  }
  std::vector<int> flat;
  flat.reserve(static_cast<std::size_t>(shape.cells()));
  for (int r = 0; r < shape.rows(); ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) !=
        shape.row_len(r)) {
      throw std::invalid_argument("tableau row length does not match shape");
    }
    const auto& row = rows[static_cast<std::size_t>(r)];
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return flat;
}

std::vector<int> row_offsets(const Partition& shape) {
  std::vector<int> off(static_cast<std::size_t>(shape.rows()) + 1, 0);
  for (int r = 0; r < shape.rows(); ++r) {
    off[static_cast<std::size_t>(r) + 1] =
        off[static_cast<std::size_t>(r)] + shape.row_len(r);
  }
  return off;
}

}  // namespace

IncreasingTableau::IncreasingTableau(Partition shape,
                                     std::vector<std::vector<int>> rows,
                                     int bound)
    : IncreasingTableau(shape, flatten(shape, rows), bound) {}

IncreasingTableau::IncreasingTableau(Partition shape,
                                     std::vector<int> row_major, int bound)
    : shape_(std::move(shape)),
      entries_(std::move(row_major)),
      offsets_(row_offsets(shape_)),
      bound_(bound) {
  if (bound_ < 0) throw std::invalid_argument("tableau bound must be >= 0");
  if (static_cast<int>(entries_.size()) != shape_.cells()) {
    throw std::invalid_argument("tableau entry count does not match shape");
  }
  for (int r = 0; r < shape_.rows(); ++r) {
    for (int c = 0; c < shape_.row_len(r); ++c) {
      const int v = at(r, c);
      if (v < 1 || v > bound_) {
        throw std::invalid_argument("tableau entry outside [1, bound]");
      }
      if (c > 0 && at(r, c - 1) >= v) {
        throw std::invalid_argument("tableau rows must increase strictly");
      }
      if (r > 0 && shape_.contains(r - 1, c) && at(r - 1, c) >= v) {
        throw std::invalid_argument("tableau columns must increase strictly");
      }
    }
  }
}

IncreasingTableau IncreasingTableau::from_rows(
    std::vector<std::vector<int>> rows, int bound) {
  std::vector<int> parts;
  parts.reserve(rows.size());
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  return IncreasingTableau(Partition(std::move(parts)), std::move(rows), bound);
}

int IncreasingTableau::at(int r, int c) const {
  if (!shape_.contains(r, c)) {
    throw std::out_of_range("tableau cell outside shape");
  }
  return entries_[static_cast<std::size_t>(offsets_[static_cast<std::size_t>(r)] + c)];
}

std::vector<std::vector<int>> IncreasingTableau::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(shape_.rows()));
  for (int r = 0; r < shape_.rows(); ++r) {
    out.emplace_back(
        entries_.begin() + offsets_[static_cast<std::size_t>(r)],
        entries_.begin() + offsets_[static_cast<std::size_t>(r) + 1]);
  }
  return out;
}

int IncreasingTableau::max_entry() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::string IncreasingTableau::to_string() const {
  std::ostringstream out;
  out << "bound " << bound_ << ':';
  for (int r = 0; r < shape_.rows(); ++r) {
    out << " [";
    for (int c = 0; c < shape_.row_len(r); ++c) {
      if (c) out << ' ';
      out << at(r, c);
    }
    out << ']';
  }
  return out.str();
}

std::strong_ordering operator<=>(const IncreasingTableau& x,
                                 const IncreasingTableau& y) {
  if (auto c = x.shape_ <=> y.shape_; c != 0) return c;
  if (auto c = x.bound_ <=> y.bound_; c != 0) return c;
  return x.entries_ <=> y.entries_;
}

bool is_increasing(const Partition& shape,
                   const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != shape.rows()) {
    throw std::invalid_argument("row count does not match shape");
  }
  for (int r = 0; r < shape.rows(); ++r) {
    if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) !=
        shape.row_len(r)) {
      throw std::invalid_argument("row length does not match shape");
    }
  }
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < shape.row_len(r); ++c) {
      const int v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (c > 0 && rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)] >= v) {
        return false;
      }
      if (r > 0 && shape.contains(r - 1, c) &&
          rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] >= v) {
        return false;
      }
    }
  }
  return true;
}

bool is_packed(const IncreasingTableau& T) {
  const int m = T.max_entry();
  std::vector<char> present(static_cast<std::size_t>(m) + 1, 0);
  for (int v : T.row_major()) present[static_cast<std::size_t>(v)] = 1;
  for (int v = 1; v <= m; ++v) {
    if (!present[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

bool is_packed_to_bound(const IncreasingTableau& T) {
  return T.max_entry() == T.bound() && is_packed(T);
}

std::vector<int> descent_set(const IncreasingTableau& T,
                             DescentConvention conv) {
  (void)conv;  // single convention; kept explicit in signatures and reports
  const int m = T.max_entry();
  // min_row[v] / max_row[v]: extreme 0-based rows where value v occurs.
  std::vector<int> min_row(static_cast<std::size_t>(m) + 2, -1);
  std::vector<int> max_row(static_cast<std::size_t>(m) + 2, -1);
  for (int r = 0; r < T.shape().rows(); ++r) {
    for (int c = 0; c < T.shape().row_len(r); ++c) {
      const auto v = static_cast<std::size_t>(T.at(r, c));
      if (min_row[v] < 0 || r < min_row[v]) min_row[v] = r;
      if (r > max_row[v]) max_row[v] = r;
    }
  }
  std::vector<int> descents;
  for (int i = 1; i < m; ++i) {
    const auto lo = static_cast<std::size_t>(i);
    if (min_row[lo] < 0 || max_row[lo + 1] < 0) continue;
    if (max_row[lo + 1] > min_row[lo]) descents.push_back(i);
  }
  return descents;
}

long long major_index(const IncreasingTableau& T, DescentConvention conv) {
  long long maj = 0;
  for (int i : descent_set(T, conv)) maj += i;
  return maj;
}

}  // namespace itab
