#pragma once

#include <gmpxx.h>

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace itab {

// Dense univariate polynomial in q with arbitrary-precision integer
// coefficients, stored lowest degree first with no trailing zeros.
class IntPoly {
public:
  IntPoly() = default;  // the zero polynomial
  explicit IntPoly(std::vector<mpz_class> coeffs);
  static IntPoly constant(mpz_class c);
  static IntPoly one() { return constant(1); }
  static IntPoly monomial(int exponent, mpz_class coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  // Coefficient of q^i; zero outside the stored range.
  const mpz_class& coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly x, const IntPoly& y) { return x += y; }
  friend IntPoly operator-(IntPoly x, const IntPoly& y) { return x -= y; }
  friend IntPoly operator*(const IntPoly& x, const IntPoly& y);
  IntPoly operator-() const;
  // Multiply by q^t.
  IntPoly shifted(int t) const;

  // Quotient when the division is exact over the integers, nullopt
  // otherwise.  Division by zero throws.
  std::optional<IntPoly> divided_exactly_by(const IntPoly& d) const;
  // Same, but an inexact division is an internal consistency failure and
  // throws std::logic_error.
  IntPoly divide_exact(const IntPoly& d) const;

  mpz_class operator()(const mpz_class& x) const;
  std::complex<double> eval(std::complex<double> x) const;
  bool is_palindromic() const;
  // Human-readable form, e.g. "1 + 2q + q^3".
  std::string to_string() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
  void trim();
  std::vector<mpz_class> c_;
};

// The d-th cyclotomic polynomial (d >= 1), computed by exact division of
// q^d - 1 by the lower cyclotomics.
IntPoly cyclotomic(int d);

}  // namespace itab
