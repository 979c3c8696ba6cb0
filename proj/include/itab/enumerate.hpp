#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "itab/errors.hpp"
#include "itab/tableau.hpp"

namespace itab {

inline constexpr std::uint64_t kNoCap = ~std::uint64_t{0};

// Visit every increasing tableau of the given shape with entries bounded by
// m, in lexicographic order of the row-major entry sequence.  With
// packed_only, restrict to tableaux whose entries cover exactly {1..m}.
// Throws BudgetError as soon as more than `cap` tableaux have been emitted.
void for_each_increasing(const Partition& shape, int m, bool packed_only,
                         const std::function<void(const IncreasingTableau&)>& fn,
                         std::uint64_t cap = kNoCap);

// Materialize the same sequence.  With threads > 1 the search tree is split
// on the first cell's value and branches run concurrently; the merged output
// is identical to the sequential one.
std::vector<IncreasingTableau> enumerate_increasing(const Partition& shape,
                                                    int m, bool packed_only,
                                                    int threads = 1,
                                                    std::uint64_t cap = kNoCap);

// Count without materializing; the cap still applies to the count itself.
std::uint64_t count_increasing(const Partition& shape, int m, bool packed_only,
                               int threads = 1, std::uint64_t cap = kNoCap);

// Standard Young tableaux of the shape: increasing tableaux with each of
// 1..cells used exactly once.
std::vector<IncreasingTableau> enumerate_syt(const Partition& shape);

// Orbit structure of an invertible self-map on a finite ground set.
template <typename T>
struct OrbitDecomposition {
  // (lexicographically least element of the orbit, orbit length), ordered by
  // representative.
  std::vector<std::pair<T, std::size_t>> orbits;
  std::size_t total = 0;
  unsigned long long order = 1;  // lcm of the orbit lengths

  std::vector<std::size_t> lengths() const {
    std::vector<std::size_t> out;
    out.reserve(orbits.size());
    for (const auto& o : orbits) out.push_back(o.second);
    return out;
  }
};

// Decompose `ground` into orbits of `step`.  The ground set must be closed
// under the map and the map must act bijectively on it; violations throw
// std::invalid_argument naming the offense (they indicate either a buggy map
// or a wrong ground set).
template <typename T, typename Step>
OrbitDecomposition<T> orbit_decomposition(std::vector<T> ground, Step&& step) {
  std::sort(ground.begin(), ground.end());
  for (std::size_t i = 1; i < ground.size(); ++i) {
    if (ground[i - 1] == ground[i]) {
      throw std::invalid_argument("orbit decomposition: duplicate ground element");
    }
  }
  auto locate = [&](const T& x) -> std::size_t {
    auto it = std::lower_bound(ground.begin(), ground.end(), x);
    if (it == ground.end() || !(*it == x)) {
      throw std::invalid_argument(
          "orbit decomposition: map left the ground set (not closed)");
    }
    return static_cast<std::size_t>(it - ground.begin());
  };

  OrbitDecomposition<T> dec;
  dec.total = ground.size();
  std::vector<char> seen(ground.size(), 0);
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (seen[i]) continue;
    seen[i] = 1;
    std::size_t len = 1;
    T cur = step(ground[i]);
    while (!(cur == ground[i])) {
      const std::size_t j = locate(cur);
      if (seen[j]) {
        throw std::invalid_argument(
            "orbit decomposition: two elements share an image (not a bijection)");
      }
      seen[j] = 1;
      ++len;
      cur = step(cur);
      if (len > ground.size()) {
        throw std::invalid_argument("orbit decomposition: orbit exceeds ground set");
      }
    }
    // The walk started at the least unseen element, which is therefore the
    // least element of its orbit.
    dec.orbits.emplace_back(ground[i], len);
    dec.order = std::lcm(dec.order, static_cast<unsigned long long>(len));
  }
  return dec;
}

}  // namespace itab
