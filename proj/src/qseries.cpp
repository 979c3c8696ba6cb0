#include "itab/qseries.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace itab {

IntPoly q_int(int d) {
  if (d < 0) throw std::invalid_argument("q_int needs d >= 0");
  return IntPoly(std::vector<mpz_class>(static_cast<std::size_t>(d), 1));
}

IntPoly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial needs n >= 0");
  IntPoly out = IntPoly::one();
  for (int d = 2; d <= n; ++d) out = out * q_int(d);
  return out;
}

IntPoly q_binomial(int n, int k) {
  if (k < 0 || k > n) {
    throw std::invalid_argument("q_binomial needs 0 <= k <= n");
  }
  IntPoly out = IntPoly::one();
  for (int j = 1; j <= k; ++j) {
    out = (out * q_int(n - k + j)).divide_exact(q_int(j));
  }
  return out;
}

IntPoly q_hook_polynomial(const Partition& shape) {
  IntPoly out = q_factorial(shape.cells());
  for (const auto& row : hook_lengths(shape)) {
    for (int h : row) out = out.divide_exact(q_int(h));
  }
  return out;
}

IntPoly maj_generating_function(const std::vector<IncreasingTableau>& tableaux,
                                DescentConvention conv) {
  IntPoly out;
  for (const auto& T : tableaux) {
    out += IntPoly::monomial(static_cast<int>(major_index(T, conv)));
  }
  return out;
}

namespace {

void check_lengths(const std::vector<std::size_t>& orbit_lengths, int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  for (std::size_t l : orbit_lengths) {
    if (l < 1 || n % static_cast<int>(l) != 0) {
      throw std::invalid_argument(
          "orbit length " + std::to_string(l) +
          " does not divide the cyclic group order " + std::to_string(n));
    }
  }
}

}  // namespace

IntPoly orbit_polynomial(const std::vector<std::size_t>& orbit_lengths, int n) {
  check_lengths(orbit_lengths, n);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(n), 0);
  for (std::size_t l : orbit_lengths) {
    const int stride = n / static_cast<int>(l);
    for (std::size_t i = 0; i < l; ++i) {
      coeffs[i * static_cast<std::size_t>(stride)] += 1;
    }
  }
  return IntPoly(std::move(coeffs));
}

std::vector<mpz_class> fixed_point_counts(
    const std::vector<std::size_t>& orbit_lengths, int n) {
  check_lengths(orbit_lengths, n);
  std::vector<mpz_class> fix(static_cast<std::size_t>(n), 0);
  for (std::size_t l : orbit_lengths) {
    fix[0] += static_cast<unsigned long>(l);
    for (int j = 1; j < n; ++j) {
      if (j % static_cast<int>(l) == 0) {
        fix[static_cast<std::size_t>(j)] += static_cast<unsigned long>(l);
      }
    }
  }
  return fix;
}

CspResult csp_check(const IntPoly& f,
                    const std::vector<std::size_t>& orbit_lengths, int n) {
  check_lengths(orbit_lengths, n);
  for (const auto& c : f.coeffs()) {
    if (c < 0) {
      throw std::invalid_argument("csp_check needs nonnegative coefficients");
    }
  }

  const std::vector<mpz_class> fix = fixed_point_counts(orbit_lengths, n);

  CspResult result;
  result.n = n;

  // f(zeta^j) depends only on the order d of zeta^j, and equality with
  // Fix(c^j) for the whole order-d class is exactly divisibility of
  // f - Fix(c^(n/d)) by the d-th cyclotomic polynomial.
  std::vector<char> divisor_pass(static_cast<std::size_t>(n) + 1, 0);
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const mpz_class& fix_d = fix[static_cast<std::size_t>((n / d) % n)];
    const IntPoly difference = f - IntPoly::constant(fix_d);
    const bool ok = difference.divided_exactly_by(cyclotomic(d)).has_value();
    divisor_pass[static_cast<std::size_t>(d)] = ok ? 1 : 0;
    if (!ok && result.first_failing_divisor == 0) {
      result.first_failing_divisor = d;
    }
  }
  result.pass = result.first_failing_divisor == 0;

  result.exponents.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    CspExponent row;
    row.exponent = j;
    row.element_order = n / std::gcd(n, j == 0 ? n : j);
    row.fixed_points = fix[static_cast<std::size_t>(j)];
    row.pass = divisor_pass[static_cast<std::size_t>(row.element_order)] != 0;
    result.exponents.push_back(std::move(row));
  }

  result.float_oracle_agrees =
      csp_check_float(f, orbit_lengths, n) == result.pass;
  return result;
}

bool csp_check_float(const IntPoly& f,
                     const std::vector<std::size_t>& orbit_lengths, int n,
                     double tol) {
  check_lengths(orbit_lengths, n);
  const std::vector<mpz_class> fix = fixed_point_counts(orbit_lengths, n);
  for (int j = 0; j < n; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / n;
    const std::complex<double> zeta{std::cos(angle), std::sin(angle)};
    const std::complex<double> value = f.eval(zeta);
    const double expected = fix[static_cast<std::size_t>(j)].get_d();
    if (std::abs(value - expected) > tol) return false;
  }
  return true;
}

bool qhook_binomial_identity(int k) {
  if (k < 2) throw std::invalid_argument("identity needs k >= 2");
  const IntPoly lhs = q_hook_polynomial(two_column_shape(k + 1, 3));
  const IntPoly rhs = q_binomial(k + 3, 3) - q_int(k + 3).shifted(k - 1);
  return lhs == rhs;
}

}  // namespace itab
