#pragma once

#include <cstddef>
#include <vector>

#include "itab/partition.hpp"
#include "itab/poly.hpp"
#include "itab/tableau.hpp"

namespace itab {

// [d]_q = 1 + q + ... + q^(d-1); [0]_q = 0.
IntPoly q_int(int d);

// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
IntPoly q_factorial(int n);

// Gaussian binomial, computed as a product of exact quotients so every
// intermediate value is a genuine polynomial.  Requires 0 <= k <= n.
IntPoly q_binomial(int n, int k);

// f^shape(q) = [N]_q! / prod of [hook]_q over all cells, N = #cells.  Every
// division is exact; a remainder signals an internal error.
IntPoly q_hook_polynomial(const Partition& shape);

// Sum of q^maj(T) over the given tableaux.
IntPoly maj_generating_function(const std::vector<IncreasingTableau>& tableaux,
                                DescentConvention conv);

// Canonical mod-(q^n - 1) representative of the orbit-structure generating
// function: each orbit of length l contributes sum over i < l of q^(i*n/l).
// Evaluates at q = 1 to the ground-set size.  Every length must divide n.
IntPoly orbit_polynomial(const std::vector<std::size_t>& orbit_lengths, int n);

// Fix(c^j) for j = 0..n-1, where c generates a cyclic group of order n
// acting with the given orbit lengths: Fix(c^j) = sum of l over orbits with
// l | j (j = 0 counts everything).
std::vector<mpz_class> fixed_point_counts(
    const std::vector<std::size_t>& orbit_lengths, int n);

struct CspExponent {
  int exponent = 0;       // j
  int element_order = 0;  // multiplicative order of c^j
  mpz_class fixed_points; // Fix(c^j)
  bool pass = false;      // f(zeta^j) == Fix(c^j), decided exactly
};

struct CspResult {
  bool pass = false;
  int n = 0;
  std::vector<CspExponent> exponents;   // j = 0..n-1
  int first_failing_divisor = 0;        // 0 when pass
  bool float_oracle_agrees = false;     // cross-check, never the verdict

  explicit operator bool() const { return pass; }
};

// Exact cyclic-sieving test: for every divisor d of n, the d-th cyclotomic
// polynomial must divide f - Fix(c^(n/d)).  The floating root-of-unity
// evaluation is run alongside as a cross-check and recorded, but the verdict
// comes from the divisibility test alone.  Negative coefficients in f or an
// orbit length not dividing n are domain errors.
CspResult csp_check(const IntPoly& f,
                    const std::vector<std::size_t>& orbit_lengths, int n);

// Floating-point root-of-unity comparison at absolute tolerance `tol`.
bool csp_check_float(const IntPoly& f,
                     const std::vector<std::size_t>& orbit_lengths, int n,
                     double tol = 1e-6);

// Whether f^{(2,2,2,1^(k-2))}(q) equals qbinom(k+3, 3) - q^(k-1) [k+3]_q.
// Requires k >= 2.
bool qhook_binomial_identity(int k);

}  // namespace itab
