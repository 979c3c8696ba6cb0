#pragma once

#include "itab/report.hpp"

namespace itab {

// Each driver enumerates the relevant ground set, computes the exact orbit
// structure and candidate polynomial, and renders a deterministic
// VerificationReport.  Ground sets larger than policy.budget raise
// BudgetError before any heavy work.  Invalid parameters raise
// std::invalid_argument.

// Cyclic sieving for all increasing a x b fillings with bound a+b under
// K-promotion (order a+b), with the Gaussian binomial qbinom(a+b, a).
VerificationReport verify_rectangle_csp(int a, int b,
                                        const ExecPolicy& policy = {});

// The same ground set splits as packed tableaux plus the promotion orbit of
// the minimal tableau (which has a+b elements and no packed member).
VerificationReport verify_packed_decomposition(int a, int b,
                                               const ExecPolicy& policy = {});

// Cyclic sieving for packed 3 x k fillings with bound k+3 under K-promotion
// (order k+3), with the hook polynomial of the two-column tail shape;
// cross-checks the count binom(k+3,3) - (k+3) against the standard-tableau
// enumeration.  Requires k >= 2.
VerificationReport verify_three_row_csp(int k, const ExecPolicy& policy = {});

// Sweep of qhook_binomial_identity over k_min..k_max.
VerificationReport verify_qhook_binomial_identity(int k_min, int k_max);

// Cyclic sieving for standard a x b tableaux under K-promotion (order a*b),
// with the rectangle hook polynomial.
VerificationReport verify_syt_rectangle_csp(int a, int b,
                                            const ExecPolicy& policy = {});

// Cyclic sieving for packed 2 x k fillings with bound m (k <= m <= 2k) under
// K-promotion (order m), with the hook polynomial of the pennant shape
// (m-k, m-k, 1^(2k-m)).
VerificationReport verify_two_row_csp(int k, int m,
                                      const ExecPolicy& policy = {});

// Cyclic sieving for packed fillings of the hook shape (r, 1^s) with bound m
// under K-promotion of order m-1, with the product of the hook polynomials
// of (m-s, 1^s) and (m-r+1, 1^(r+s-m)).
VerificationReport verify_hook_shape_csp(int r, int s, int m,
                                         const ExecPolicy& policy = {});

// Negative result at the 4 x 4 scale: no hook polynomial f of a partition
// with at most max_boxes cells satisfies f(1) = 62 together with the sieving
// condition for packed 4 x 4 fillings under K-promotion.  (62 = 2 * 31 has a
// prime factor exceeding max_boxes, so at this scale no candidate even
// reaches the evaluation stage; the report records the sweep.)
VerificationReport verify_no_hook_sieving_4x4(int max_boxes = 10,
                                              const ExecPolicy& policy = {});

}  // namespace itab
