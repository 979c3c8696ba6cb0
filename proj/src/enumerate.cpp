#include "itab/enumerate.hpp"

#include <atomic>
#include <future>

namespace itab {

namespace {

// Precomputed per-cell search data for the row-major backtracker.
struct SearchPlan {
  Partition shape;
  int m = 0;
  int n = 0;
  std::vector<int> left;   // flat index of the western neighbor, -1 at border
  std::vector<int> up;     // flat index of the northern neighbor, -1 at border
  std::vector<int> chain;  // cells in the longest south/east chain from here
};

SearchPlan make_plan(const Partition& shape, int m) {
  SearchPlan p;
  p.shape = shape;
  p.m = m;
  p.n = shape.cells();
  p.left.assign(static_cast<std::size_t>(p.n), -1);
  p.up.assign(static_cast<std::size_t>(p.n), -1);
  p.chain.assign(static_cast<std::size_t>(p.n), 1);
  std::vector<int> offset(static_cast<std::size_t>(shape.rows()) + 1, 0);
  for (int r = 0; r < shape.rows(); ++r) {
    offset[static_cast<std::size_t>(r) + 1] =
        offset[static_cast<std::size_t>(r)] + shape.row_len(r);
  }
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < shape.row_len(r); ++c) {
      const int idx = offset[static_cast<std::size_t>(r)] + c;
      if (c > 0) p.left[static_cast<std::size_t>(idx)] = idx - 1;
      if (r > 0) {
        p.up[static_cast<std::size_t>(idx)] = offset[static_cast<std::size_t>(r) - 1] + c;
      }
    }
  }
  for (int r = shape.rows() - 1; r >= 0; --r) {
    for (int c = shape.row_len(r) - 1; c >= 0; --c) {
      const int idx = offset[static_cast<std::size_t>(r)] + c;
      int best = 0;
      if (shape.contains(r, c + 1)) {
        best = std::max(best, p.chain[static_cast<std::size_t>(idx) + 1]);
      }
      if (shape.contains(r + 1, c)) {
        best = std::max(best, p.chain[static_cast<std::size_t>(
                                  offset[static_cast<std::size_t>(r) + 1] + c)]);
      }
      p.chain[static_cast<std::size_t>(idx)] = best + 1;
    }
  }
  return p;
}

// Depth-first filler.  Cell values run from max(left, up)+1 up to
// m - chain + 1 (a longer forced chain below caps the value sooner), which
// makes every leaf a valid increasing filling; packedness is checked only at
// the leaf via a value-presence counter.
class Walker {
public:
  Walker(const SearchPlan& plan, bool packed_only,
         std::function<void(const std::vector<int>&)> leaf)
      : p_(plan),
        packed_only_(packed_only),
        leaf_(std::move(leaf)),
        buf_(static_cast<std::size_t>(plan.n), 0),
        count_(static_cast<std::size_t>(plan.m) + 2, 0) {}

  // Enumerate with the first cell restricted to [first_lo, first_hi].
  void run(int first_lo, int first_hi) {
    if (p_.n == 0) {
      emit();
      return;
    }
    const int lo = std::max(first_lo, 1);
    const int hi = std::min(first_hi, p_.m - p_.chain[0] + 1);
    for (int v = lo; v <= hi; ++v) {
      place(0, v);
      rec(1);
      unplace(0, v);
    }
  }

private:
  void emit() {
    if (packed_only_ && distinct_ != p_.m) return;
    leaf_(buf_);
  }

  void place(int idx, int v) {
    buf_[static_cast<std::size_t>(idx)] = v;
    if (++count_[static_cast<std::size_t>(v)] == 1) ++distinct_;
  }

  void unplace(int idx, int v) {
    if (--count_[static_cast<std::size_t>(v)] == 0) --distinct_;
    (void)idx;
  }

  void rec(int idx) {
    if (idx == p_.n) {
      emit();
      return;
    }
    int lo = 1;
    const int l = p_.left[static_cast<std::size_t>(idx)];
    const int u = p_.up[static_cast<std::size_t>(idx)];
    if (l >= 0) lo = std::max(lo, buf_[static_cast<std::size_t>(l)] + 1);
    if (u >= 0) lo = std::max(lo, buf_[static_cast<std::size_t>(u)] + 1);
    const int hi = p_.m - p_.chain[static_cast<std::size_t>(idx)] + 1;
    for (int v = lo; v <= hi; ++v) {
      place(idx, v);
      rec(idx + 1);
      unplace(idx, v);
    }
  }

  const SearchPlan& p_;
  bool packed_only_;
  std::function<void(const std::vector<int>&)> leaf_;
  std::vector<int> buf_;
  std::vector<int> count_;
  int distinct_ = 0;
};

}  // namespace

void for_each_increasing(const Partition& shape, int m, bool packed_only,
                         const std::function<void(const IncreasingTableau&)>& fn,
                         std::uint64_t cap) {
  if (m < 0) throw std::invalid_argument("entry bound must be >= 0");
  const SearchPlan plan = make_plan(shape, m);
  std::uint64_t emitted = 0;
  Walker walker(plan, packed_only, [&](const std::vector<int>& buf) {
    if (++emitted > cap) {
      throw BudgetError("enumeration exceeded the ground-set budget of " +
                        std::to_string(cap) + " tableaux");
    }
    fn(IncreasingTableau(shape, buf, m));
  });
  walker.run(1, m);
}

std::vector<IncreasingTableau> enumerate_increasing(const Partition& shape,
                                                    int m, bool packed_only,
                                                    int threads,
                                                    std::uint64_t cap) {
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
  if (m < 0) throw std::invalid_argument("entry bound must be >= 0");

  const SearchPlan plan = make_plan(shape, m);
  const int first_hi = plan.n == 0 ? 0 : plan.m - plan.chain[0] + 1;
  const int workers = std::min(threads, std::max(first_hi, 1));

  if (workers <= 1 || plan.n == 0) {
    std::vector<IncreasingTableau> out;
    for_each_increasing(
        shape, m, packed_only,
        [&](const IncreasingTableau& T) { out.push_back(T); }, cap);
    return out;
  }

  // Split the search tree on the first cell's value; each branch yields a
  // lexicographically contiguous block, so concatenating blocks in value
  // order reproduces the sequential output independent of the thread count.
  std::atomic<std::uint64_t> emitted{0};
  std::vector<std::future<std::vector<IncreasingTableau>>> futures;
  futures.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const int lo = 1 + (first_hi * w) / workers;
    const int hi = (first_hi * (w + 1)) / workers;
    futures.push_back(std::async(std::launch::async, [&, lo, hi]() {
      std::vector<IncreasingTableau> out;
      Walker walker(plan, packed_only, [&](const std::vector<int>& buf) {
        if (emitted.fetch_add(1, std::memory_order_relaxed) + 1 > cap) {
          throw BudgetError("enumeration exceeded the ground-set budget of " +
                            std::to_string(cap) + " tableaux");
        }
        out.emplace_back(shape, buf, m);
      });
      walker.run(lo, hi);
      return out;
    }));
  }

  std::vector<IncreasingTableau> merged;
  std::exception_ptr first_error;
  for (auto& f : futures) {
    try {
      auto block = f.get();
      if (!first_error) {
        merged.insert(merged.end(), std::make_move_iterator(block.begin()),
                      std::make_move_iterator(block.end()));
      }
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return merged;
}

std::uint64_t count_increasing(const Partition& shape, int m, bool packed_only,
                               int threads, std::uint64_t cap) {
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
  if (m < 0) throw std::invalid_argument("entry bound must be >= 0");

  const SearchPlan plan = make_plan(shape, m);
  const int first_hi = plan.n == 0 ? 0 : plan.m - plan.chain[0] + 1;
  const int workers = std::min(threads, std::max(first_hi, 1));

  auto over_budget = [cap]() {
    return BudgetError("enumeration exceeded the ground-set budget of " +
                       std::to_string(cap) + " tableaux");
  };

  if (workers <= 1 || plan.n == 0) {
    std::uint64_t count = 0;
    Walker walker(plan, packed_only, [&](const std::vector<int>&) {
      if (++count > cap) throw over_budget();
    });
    walker.run(1, m);
    return count;
  }

  std::atomic<std::uint64_t> counted{0};
  std::vector<std::future<void>> futures;
  futures.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const int lo = 1 + (first_hi * w) / workers;
    const int hi = (first_hi * (w + 1)) / workers;
    futures.push_back(std::async(std::launch::async, [&, lo, hi]() {
      Walker walker(plan, packed_only, [&](const std::vector<int>&) {
        if (counted.fetch_add(1, std::memory_order_relaxed) + 1 > cap) {
          throw over_budget();
        }
      });
      walker.run(lo, hi);
    }));
  }
  std::exception_ptr first_error;
  for (auto& f : futures) {
    try {
      f.get();
    } catch (...) {
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
  return counted.load();
}

std::vector<IncreasingTableau> enumerate_syt(const Partition& shape) {
  // Packed with bound = #cells forces each of 1..n to appear exactly once.
  return enumerate_increasing(shape, shape.cells(), /*packed_only=*/true);
}

}  // namespace itab
