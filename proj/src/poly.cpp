#include "itab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace itab {

namespace {
const mpz_class kZero = 0;
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(mpz_class c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(int exponent, mpz_class coeff) {
  if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(static_cast<std::size_t>(exponent) + 1, 0);
    p.c_.back() = std::move(coeff);
  }
  return p;
}

const mpz_class& IntPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
  if (x.is_zero() || y.is_zero()) return IntPoly{};
  std::vector<mpz_class> out(x.c_.size() + y.c_.size() - 1, 0);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    if (x.c_[i] == 0) continue;
    for (std::size_t j = 0; j < y.c_.size(); ++j) {
      out[i + j] += x.c_[i] * y.c_[j];
    }
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

IntPoly IntPoly::shifted(int t) const {
  if (t < 0) throw std::invalid_argument("shift must be >= 0");
  if (is_zero()) return IntPoly{};
  std::vector<mpz_class> out(static_cast<std::size_t>(t), 0);
  out.insert(out.end(), c_.begin(), c_.end());
  return IntPoly(std::move(out));
}

std::optional<IntPoly> IntPoly::divided_exactly_by(const IntPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (is_zero()) return IntPoly{};
  if (degree() < d.degree()) return std::nullopt;

  // Long division from the top; when p = qd over the integers, each leading
  // coefficient of the running remainder is divisible by d's leading
  // coefficient, so a failed step or a nonzero tail certifies inexactness.
  std::vector<mpz_class> rem = c_;
  const int dd = d.degree();
  const mpz_class& lead = d.c_.back();
  std::vector<mpz_class> quot(c_.size() - static_cast<std::size_t>(dd), 0);
  for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
    mpz_class& top = rem[static_cast<std::size_t>(k + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_class q = top / lead;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * d.c_[static_cast<std::size_t>(i)];
    }
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

IntPoly IntPoly::divide_exact(const IntPoly& d) const {
  auto q = divided_exactly_by(d);
  if (!q) {
    throw std::logic_error("polynomial division left a remainder where an exact quotient was required");
  }
  return std::move(*q);
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> IntPoly::eval(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

bool IntPoly::is_palindromic() const {
  for (std::size_t i = 0, j = c_.size(); i < j; ++i) {
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  }
  return true;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class a = c_[i];
    if (first) {
      if (a < 0) out << '-';
    } else {
      out << (a < 0 ? " - " : " + ");
    }
    mpz_class mag = abs(a);
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) {
      out << 'q';
      if (i >= 2) out << '^' << i;
    }
    first = false;
  }
  return out.str();
}

IntPoly cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  // Phi_d = (q^d - 1) / prod of Phi_e over proper divisors e of d, built
  // bottom-up so each step is a single exact division.
  std::vector<IntPoly> table(static_cast<std::size_t>(d) + 1);
  for (int e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    IntPoly num = IntPoly::monomial(e) - IntPoly::one();
    for (int f = 1; f < e; ++f) {
      if (e % f != 0) continue;
      num = num.divide_exact(table[static_cast<std::size_t>(f)]);
    }
    table[static_cast<std::size_t>(e)] = std::move(num);
  }
  return table[static_cast<std::size_t>(d)];
}

}  // namespace itab
