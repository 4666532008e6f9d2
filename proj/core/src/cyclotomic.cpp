#include "polyrep/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace polyrep {

namespace {

long fold(long k, int n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace

CycloElement::CycloElement(int order) : order_(order) {
  if (order < 2) throw ValidationError("cyclotomic order must be >= 2");
  coeffs_.assign(order, Rational(0));
}

CycloElement CycloElement::from_rational(int order, const Rational& value) {
  CycloElement x(order);
  x.coeffs_[0] = value;
  return x;
}

CycloElement CycloElement::root_power(int order, long k) {
  CycloElement x(order);
  x.coeffs_[fold(k, order)] = 1;
  return x;
}

void CycloElement::add_root_power_multiple(long k, const Rational& coeff) {
  coeffs_[fold(k, order_)] += coeff;
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  if (order_ != o.order_) throw ValidationError("cyclotomic order mismatch");
  CycloElement out(order_);
  for (int t = 0; t < order_; ++t) out.coeffs_[t] = coeffs_[t] + o.coeffs_[t];
  return out;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
  if (order_ != o.order_) throw ValidationError("cyclotomic order mismatch");
  CycloElement out(order_);
  for (int a = 0; a < order_; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; b < order_; ++b) {
      if (o.coeffs_[b] == 0) continue;
      out.coeffs_[(a + b) % order_] += coeffs_[a] * o.coeffs_[b];
    }
  }
  return out;
}

CycloElement CycloElement::scaled(const Rational& factor) const {
  CycloElement out(order_);
  for (int t = 0; t < order_; ++t) out.coeffs_[t] = coeffs_[t] * factor;
  return out;
}

bool CycloElement::operator==(const CycloElement& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

std::vector<Rational> CycloElement::reduced() const {
  // Remainder of sum c_t x^t modulo Phi_n: the normal form of the element,
  // zero exactly when the complex value vanishes (Phi_n is the minimal
  // polynomial of every primitive root).
  const std::vector<BigInt> phi = cyclotomic_polynomial(order_);
  const int deg_phi = static_cast<int>(phi.size()) - 1;
  std::vector<Rational> rem(coeffs_);
  for (int d = order_ - 1; d >= deg_phi; --d) {
    if (rem[d] == 0) continue;
    const Rational factor = rem[d] / Rational(phi[deg_phi]);
    for (int t = 0; t <= deg_phi; ++t) rem[d - deg_phi + t] -= factor * Rational(phi[t]);
  }
  rem.resize(deg_phi);
  return rem;
}

bool CycloElement::is_zero() const {
  for (const Rational& c : reduced())
    if (c != 0) return false;
  return true;
}

bool CycloElement::equals_rational(const Rational& value) const {
  CycloElement diff(*this);
  diff.coeffs_[0] -= value;
  return diff.is_zero();
}

std::complex<double> CycloElement::to_complex(int m) const {
  if (m == 0 || (m < 0 ? -m : m) != order_) throw ValidationError("dilation does not match cyclotomic order");
  const double angle = -2.0 * std::numbers::pi / static_cast<double>(m);
  std::complex<double> sum(0.0, 0.0);
  for (int t = 0; t < order_; ++t) {
    if (coeffs_[t] == 0) continue;
    const double c = coeffs_[t].get_d();
    sum += c * std::complex<double>(std::cos(angle * t), std::sin(angle * t));
  }
  return sum;
}

std::string CycloElement::to_string() const {
  const std::vector<Rational> rem = reduced();
  std::ostringstream out;
  bool first = true;
  for (std::size_t t = 0; t < rem.size(); ++t) {
    if (rem[t] == 0) continue;
    Rational c = rem[t];
    if (first) {
      if (c < 0) { out << "-"; c = -c; }
    } else {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (t == 0 || c != 1) out << rational_to_string(c);
    if (t >= 1) {
      if (c != 1) out << "*";
      out << "zeta";
      if (t > 1) out << "^" << t;
    }
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

namespace {

// Exact division of dense integer polynomials, used only by Phi_n below where
// divisibility is guaranteed.
std::vector<BigInt> divide_exact(const std::vector<BigInt>& num, const std::vector<BigInt>& den) {
  std::vector<BigInt> rem(num);
  const int dd = static_cast<int>(den.size()) - 1;
  const int dn = static_cast<int>(rem.size()) - 1;
  std::vector<BigInt> quot(dn - dd + 1, BigInt(0));
  for (int d = dn; d >= dd; --d) {
    if (rem[d] == 0) continue;
    BigInt q = rem[d] / den[dd];
    quot[d - dd] = q;
    for (int t = 0; t <= dd; ++t) rem[d - dd + t] -= q * den[t];
  }
  for (const BigInt& c : rem)
    if (c != 0) throw std::logic_error("inexact cyclotomic division");
  return quot;
}

}  // namespace

std::vector<BigInt> cyclotomic_polynomial(int n) {
  if (n < 1) throw ValidationError("cyclotomic index must be >= 1");
  if (n == 1) return {BigInt(-1), BigInt(1)};  // x - 1
  // x^n - 1 divided by the product of Phi_d over proper divisors d | n.
  std::vector<BigInt> num(n + 1, BigInt(0));
  num[0] = -1;
  num[n] = 1;
  std::vector<BigInt> den{BigInt(1)};
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<BigInt> phi_d = cyclotomic_polynomial(d);
    std::vector<BigInt> next(den.size() + phi_d.size() - 1, BigInt(0));
    for (std::size_t a = 0; a < den.size(); ++a)
      for (std::size_t b = 0; b < phi_d.size(); ++b) next[a + b] += den[a] * phi_d[b];
    den = std::move(next);
  }
  return divide_exact(num, den);
}

CycloElement eval_symbol_at_coset(const LaurentPoly& p, int m, const MultiIndex& e) {
  const int n = m < 0 ? -m : m;
  if (n < 2) throw ValidationError("dilation modulus must be >= 2");
  if (e.dim() != p.dim()) throw ValidationError("coset dimension mismatch");
  CycloElement out(n);
  for (const auto& [exp, c] : p.terms()) {
    long dot = 0;
    for (int i = 0; i < p.dim(); ++i) dot += static_cast<long>(e[i]) * exp[i];
    out.add_root_power_multiple(dot, c);
  }
  return out;
}

}  // namespace polyrep
