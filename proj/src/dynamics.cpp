#include "itab/dynamics.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <utility>

namespace itab {

namespace {

// Flat row-major geometry of a partition diagram.
struct Geometry {
  int n = 0;
  std::vector<int> south;  // flat index of the cell below, -1 at the border
  std::vector<int> east;   // flat index of the cell to the right, -1 at the border
  std::vector<int> north;
  std::vector<int> west;
};

Geometry make_geometry(const Partition& shape) {
  Geometry g;
  g.n = shape.cells();
  g.south.assign(static_cast<std::size_t>(g.n), -1);
  g.east.assign(static_cast<std::size_t>(g.n), -1);
  g.north.assign(static_cast<std::size_t>(g.n), -1);
  g.west.assign(static_cast<std::size_t>(g.n), -1);
  int idx = 0;
  for (int r = 0; r < shape.rows(); ++r) {
    for (int c = 0; c < shape.row_len(r); ++c, ++idx) {
      const auto i = static_cast<std::size_t>(idx);
      // In a partition diagram the row above is at least as long, so the
      // northern neighbor always exists when r > 0.
      if (r > 0) g.north[i] = idx - shape.row_len(r - 1);
      if (c > 0) g.west[i] = idx - 1;
      if (shape.contains(r, c + 1)) g.east[i] = idx + 1;
      if (shape.contains(r + 1, c)) g.south[i] = idx + shape.row_len(r);
    }
  }
  return g;
}

}  // namespace

IncreasingTableau k_promote(const IncreasingTableau& T) {
  const Partition& shape = T.shape();
  const int m = T.bound();
  const Geometry geo = make_geometry(shape);
  std::vector<int> g = T.row_major();  // 0 marks a hole

  for (int& v : g) {
    if (v == 1) v = 0;
  }

  // Each pass fills every current hole that still sees a filled south/east
  // neighbor with the minimum of those neighbor values, then erases that
  // value from the neighbors where it occurred; the erased cells are the
  // holes of the next pass.  All holes of a pass act on the same snapshot.
  for (int guard = 0; ; ++guard) {
    if (guard > geo.n + 1) throw std::logic_error("promotion slide did not terminate");
    std::vector<std::pair<int, int>> fills;
    for (int i = 0; i < geo.n; ++i) {
      if (g[static_cast<std::size_t>(i)] != 0) continue;
      int v = INT_MAX;
      const int s = geo.south[static_cast<std::size_t>(i)];
      const int e = geo.east[static_cast<std::size_t>(i)];
      if (s >= 0 && g[static_cast<std::size_t>(s)] > 0) {
        v = std::min(v, g[static_cast<std::size_t>(s)]);
      }
      if (e >= 0 && g[static_cast<std::size_t>(e)] > 0) {
        v = std::min(v, g[static_cast<std::size_t>(e)]);
      }
      if (v != INT_MAX) fills.emplace_back(i, v);
    }
    if (fills.empty()) break;
    for (const auto& [i, v] : fills) {
      g[static_cast<std::size_t>(i)] = v;
      const int s = geo.south[static_cast<std::size_t>(i)];
      const int e = geo.east[static_cast<std::size_t>(i)];
      if (s >= 0 && g[static_cast<std::size_t>(s)] == v) g[static_cast<std::size_t>(s)] = 0;
      if (e >= 0 && g[static_cast<std::size_t>(e)] == v) g[static_cast<std::size_t>(e)] = 0;
    }
  }

  for (int& v : g) v = (v == 0 ? m + 1 : v) - 1;
  return IncreasingTableau(shape, std::move(g), m);
}

IncreasingTableau k_promote_power(const IncreasingTableau& T, long long steps) {
  if (steps < 0) throw std::invalid_argument("promotion step count must be >= 0");
  IncreasingTableau cur = T;
  for (long long s = 0; s < steps; ++s) cur = k_promote(cur);
  return cur;
}

IncreasingTableau k_bk_toggle(const IncreasingTableau& T, int i) {
  const int m = T.bound();
  if (i < 1 || i >= m) {
    throw std::invalid_argument("toggle index must satisfy 1 <= i < bound");
  }
  const Partition& shape = T.shape();
  const Geometry geo = make_geometry(shape);
  std::vector<int> g = T.row_major();

  std::vector<char> seen(static_cast<std::size_t>(geo.n), 0);
  std::vector<int> stack, component;
  for (int start = 0; start < geo.n; ++start) {
    const auto s0 = static_cast<std::size_t>(start);
    if (seen[s0] || (g[s0] != i && g[s0] != i + 1)) continue;
    // Orthogonally connected component of cells holding i or i+1.
    component.clear();
    stack.assign(1, start);
    seen[s0] = 1;
    while (!stack.empty()) {
      const int cur = stack.back();
      stack.pop_back();
      component.push_back(cur);
      for (int nb : {geo.north[static_cast<std::size_t>(cur)],
                     geo.south[static_cast<std::size_t>(cur)],
                     geo.west[static_cast<std::size_t>(cur)],
                     geo.east[static_cast<std::size_t>(cur)]}) {
        if (nb < 0) continue;
        const auto nbi = static_cast<std::size_t>(nb);
        if (seen[nbi] || (g[nbi] != i && g[nbi] != i + 1)) continue;
        seen[nbi] = 1;
        stack.push_back(nb);
      }
    }
    const bool any_lo = std::any_of(component.begin(), component.end(),
                                    [&](int c) { return g[static_cast<std::size_t>(c)] == i; });
    const bool any_hi = std::any_of(component.begin(), component.end(),
                                    [&](int c) { return g[static_cast<std::size_t>(c)] == i + 1; });
    if (any_lo && any_hi) continue;  // mixed component: fixed
    const int replacement = any_lo ? i + 1 : i;
    for (int c : component) g[static_cast<std::size_t>(c)] = replacement;
  }
  return IncreasingTableau(shape, std::move(g), m);
}

IncreasingTableau k_promote_toggles(const IncreasingTableau& T) {
  IncreasingTableau cur = T;
  for (int i = 1; i < T.bound(); ++i) cur = k_bk_toggle(cur, i);
  return cur;
}

IncreasingTableau k_evacuate(const IncreasingTableau& T) {
  IncreasingTableau cur = T;
  for (int sweep_len = T.bound() - 1; sweep_len >= 1; --sweep_len) {
    for (int i = 1; i <= sweep_len; ++i) cur = k_bk_toggle(cur, i);
  }
  return cur;
}

IncreasingTableau minimal_tableau(int a, int b) {
  if (a < 1 || b < 1) {
    throw std::invalid_argument("rectangle dimensions must be positive");
  }
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) entries.push_back(i + j + 1);
  }
  return IncreasingTableau(Partition::rectangle(a, b), std::move(entries), a + b);
}

std::vector<IncreasingTableau> minimal_tableau_orbit(int a, int b) {
  const IncreasingTableau start = minimal_tableau(a, b);
  std::vector<IncreasingTableau> orbit{start};
  IncreasingTableau cur = k_promote(start);
  while (!(cur == start)) {
    orbit.push_back(cur);
    cur = k_promote(cur);
    if (static_cast<int>(orbit.size()) > 4 * (a + b) + 8) {
      throw std::logic_error("minimal tableau orbit failed to close");
    }
  }
  return orbit;
}

OrderIdeal tableau_to_ideal(const IncreasingTableau& T) {
  const Partition& shape = T.shape();
  if (shape.empty() || !shape.is_rectangle()) {
    throw std::invalid_argument("tableau_to_ideal needs a nonempty rectangular shape");
  }
  const int a = shape.rows();
  const int b = shape.row_len(0);
  if (T.bound() != a + b) {
    throw std::invalid_argument("tableau_to_ideal needs bound == rows + cols");
  }
  for (int r = 0; r < a; ++r) {
    for (int c = 0; c < b; ++c) {
      const int v = T.at(r, c);
      if (v != r + c + 1 && v != r + c + 2) {
        throw std::invalid_argument(
            "tableau_to_ideal needs every entry in {i+j-1, i+j}");
      }
    }
  }
  // Cells with the larger value form an order filter; rotating the grid by
  // 180 degrees turns it into an ideal, so row r of the profile counts the
  // large entries in tableau row a-1-r.
  std::vector<int> profile(static_cast<std::size_t>(a), 0);
  for (int r = 0; r < a; ++r) {
    int count = 0;
    for (int c = 0; c < b; ++c) {
      if (T.at(a - 1 - r, c) == (a - 1 - r) + c + 2) ++count;
    }
    profile[static_cast<std::size_t>(r)] = count;
  }
  return OrderIdeal(a, b, std::move(profile));
}

IncreasingTableau ideal_to_tableau(const OrderIdeal& J) {
  const int a = J.box_rows();
  const int b = J.box_cols();
  if (a < 1 || b < 1) {
    throw std::invalid_argument("ideal_to_tableau needs a nonempty box");
  }
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(a) * static_cast<std::size_t>(b));
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      const bool large = J.contains(a - 1 - i, b - 1 - j);
      entries.push_back(i + j + 1 + (large ? 1 : 0));
    }
  }
  return IncreasingTableau(Partition::rectangle(a, b), std::move(entries), a + b);
}

}  // namespace itab
