#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyrep/multi_index.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
/// Invariant: every stored key has length dim() and no stored coefficient is
/// zero, so equality of maps is equality of polynomials.
class LaurentPoly {
public:
  using TermMap = std::map<MultiIndex, Rational, GradedLex>;

  explicit LaurentPoly(int dim);
  static LaurentPoly constant(int dim, const Rational& value);
  static LaurentPoly monomial(int dim, const MultiIndex& exponent,
                              const Rational& coeff = Rational(1));

  int dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const MultiIndex& exponent) const;
  /// Adds c * z^exponent, pruning the term if the sum cancels.
  void add_term(const MultiIndex& exponent, const Rational& coeff);

  /// Componentwise [min, max] exponent bounds, absent for the zero polynomial.
  std::optional<std::pair<MultiIndex, MultiIndex>> support_box() const;
  /// max over support of max_i |alpha_i|; 0 for the zero polynomial.
  int support_radius() const;
  /// max over axes of (max alpha_i - min alpha_i); 0 for the zero polynomial.
  int support_diameter() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Rational& factor) const;
  bool operator==(const LaurentPoly& o) const;

  /// z^alpha * p: every exponent translated by alpha.
  LaurentPoly monomial_shift(const MultiIndex& alpha) const;

  /// Formal mixed partial derivative D^j. D^j z^alpha = q_j(alpha) z^(alpha-j)
  /// with q_j the tensor falling factorial; computed in one pass.
  LaurentPoly partial_derivative(const MultiIndex& j) const;

  /// Substitutes variable i by the monomial with exponent vector M[.][i]
  /// (columns of M are the images), i.e. every exponent alpha maps to M*alpha.
  LaurentPoly substitute_monomial_map(const std::vector<std::vector<int>>& M) const;

  /// Exact evaluation at a rational point. Throws ValidationError when a zero
  /// coordinate meets a negative exponent.
  Rational eval(const std::vector<Rational>& point) const;
  /// Value at (1,...,1), i.e. the coefficient sum.
  Rational eval_at_ones() const;

  std::string to_string() const;

private:
  int dim_ = 0;
  TermMap terms_;
  void check_same_dim(const LaurentPoly& o) const;
};

/// q_j(x) = prod_i prod_{l=0..j_i-1} (x_i - l); the empty product is 1.
Rational falling_factorial(const MultiIndex& j, const std::vector<Rational>& x);

/// Same product over integer points, as an exact integer.
BigInt falling_factorial_int(const MultiIndex& j, const MultiIndex& alpha);

/// Componentwise binomial coefficient C(j, l) for l <= j.
BigInt multi_binomial(const MultiIndex& j, const MultiIndex& l);

}  // namespace polyrep
