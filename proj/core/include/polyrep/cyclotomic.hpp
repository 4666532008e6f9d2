#pragma once

#include <complex>
#include <string>
#include <vector>

#include "polyrep/laurent.hpp"
#include "polyrep/multi_index.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

/// Exact element of Q[zeta], zeta a primitive n-th root of unity, stored as
/// the coefficient vector of sum c_t zeta^t reduced modulo x^n - 1. Arithmetic
/// stays in the quotient by x^n - 1; the minimal polynomial Phi_n enters only
/// in the zero test.
class CycloElement {
public:
  explicit CycloElement(int order);
  static CycloElement from_rational(int order, const Rational& value);
  /// zeta^(k mod n). Requires order >= 2.
  static CycloElement root_power(int order, long k);

  int order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// += c * zeta^(k mod n), k may be negative.
  void add_root_power_multiple(long k, const Rational& coeff);

  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator*(const CycloElement& o) const;
  CycloElement scaled(const Rational& factor) const;
  bool operator==(const CycloElement& o) const;

  /// Normal form: the coefficient polynomial reduced modulo Phi_n
  /// (length = degree of Phi_n).
  std::vector<Rational> reduced() const;

  /// Exact decision of "== 0 as a complex number": reduce the coefficient
  /// polynomial modulo Phi_n and test for the zero remainder.
  bool is_zero() const;

  /// Present exactly when the element lies in Q (all zeta^t terms with t>0
  /// reduce away); used by tests on the trivial coset.
  bool equals_rational(const Rational& value) const;

  /// Numeric value with zeta = e^(-2 pi i / m); sign of m respected.
  /// Cross-check and rendering only, never used for decisions.
  std::complex<double> to_complex(int m) const;

  std::string to_string() const;

private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// The n-th cyclotomic polynomial, ascending dense integer coefficients.
/// Computed by dividing x^n - 1 by the product of Phi_d over proper divisors.
std::vector<BigInt> cyclotomic_polynomial(int n);

/// Value of p at the coset point eps_e = (zeta^{e_1}, ..., zeta^{e_s}):
/// sum_alpha p_alpha zeta^((e . alpha) mod |m|).
CycloElement eval_symbol_at_coset(const LaurentPoly& p, int m, const MultiIndex& e);

}  // namespace polyrep
