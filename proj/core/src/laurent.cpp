#include "polyrep/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace polyrep {

LaurentPoly::LaurentPoly(int dim) : dim_(dim) {
  if (dim < 1) throw ValidationError("polynomial dimension must be >= 1");
}

LaurentPoly LaurentPoly::constant(int dim, const Rational& value) {
  LaurentPoly p(dim);
  p.add_term(MultiIndex::zeros(dim), value);
  return p;
}

LaurentPoly LaurentPoly::monomial(int dim, const MultiIndex& exponent, const Rational& coeff) {
  LaurentPoly p(dim);
  p.add_term(exponent, coeff);
  return p;
}

Rational LaurentPoly::coefficient(const MultiIndex& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const MultiIndex& exponent, const Rational& coeff) {
  if (exponent.dim() != dim_) throw ValidationError("exponent dimension mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::pair<MultiIndex, MultiIndex>> LaurentPoly::support_box() const {
  if (terms_.empty()) return std::nullopt;
  std::vector<int> lo(dim_, 0), hi(dim_, 0);
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    for (int i = 0; i < dim_; ++i) {
      if (first || exp[i] < lo[i]) lo[i] = exp[i];
      if (first || exp[i] > hi[i]) hi[i] = exp[i];
    }
    first = false;
  }
  return std::make_pair(MultiIndex(std::move(lo)), MultiIndex(std::move(hi)));
}

int LaurentPoly::support_radius() const {
  auto box = support_box();
  if (!box) return 0;
  int r = 0;
  for (int i = 0; i < dim_; ++i) {
    r = std::max(r, std::abs(box->first[i]));
    r = std::max(r, std::abs(box->second[i]));
  }
  return r;
}

int LaurentPoly::support_diameter() const {
  auto box = support_box();
  if (!box) return 0;
  int d = 0;
  for (int i = 0; i < dim_; ++i) d = std::max(d, box->second[i] - box->first[i]);
  return d;
}

void LaurentPoly::check_same_dim(const LaurentPoly& o) const {
  if (dim_ != o.dim_) throw ValidationError("polynomial dimension mismatch");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_same_dim(o);
  LaurentPoly out(*this);
  for (const auto& [exp, c] : o.terms_) out.add_term(exp, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_same_dim(o);
  LaurentPoly out(*this);
  for (const auto& [exp, c] : o.terms_) out.add_term(exp, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_same_dim(o);
  LaurentPoly out(dim_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& factor) const {
  LaurentPoly out(dim_);
  if (factor == 0) return out;
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, c * factor);
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return dim_ == o.dim_ && terms_ == o.terms_;
}

LaurentPoly LaurentPoly::monomial_shift(const MultiIndex& alpha) const {
  if (alpha.dim() != dim_) throw ValidationError("shift dimension mismatch");
  LaurentPoly out(dim_);
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp + alpha, c);
  return out;
}

LaurentPoly LaurentPoly::partial_derivative(const MultiIndex& j) const {
  if (j.dim() != dim_) throw ValidationError("derivative order dimension mismatch");
  if (!j.is_nonnegative()) throw ValidationError("negative derivative order");
  LaurentPoly out(dim_);
  for (const auto& [exp, c] : terms_) {
    const BigInt q = falling_factorial_int(j, exp);
    if (q == 0) continue;
    out.add_term(exp - j, c * Rational(q));
  }
  return out;
}

LaurentPoly LaurentPoly::substitute_monomial_map(const std::vector<std::vector<int>>& M) const {
  if (static_cast<int>(M.size()) != dim_) throw ValidationError("substitution matrix must be square");
  for (const auto& row : M)
    if (static_cast<int>(row.size()) != dim_)
      throw ValidationError("substitution matrix must be square");
  LaurentPoly out(dim_);
  for (const auto& [exp, c] : terms_) {
    std::vector<int> image(dim_, 0);
    for (int l = 0; l < dim_; ++l)
      for (int i = 0; i < dim_; ++i) image[l] += M[l][i] * exp[i];
    out.add_term(MultiIndex(std::move(image)), c);
  }
  return out;
}

Rational LaurentPoly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dim_) throw ValidationError("evaluation point dimension mismatch");
  Rational sum(0);
  for (const auto& [exp, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < dim_; ++i) term *= pow_rational(point[i], exp[i]);
    sum += term;
  }
  return sum;
}

Rational LaurentPoly::eval_at_ones() const {
  Rational sum(0);
  for (const auto& [exp, c] : terms_) sum += c;
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    if (!first) out << " + ";
    out << rational_to_string(c) << "*z^" << exp.to_string();
    first = false;
  }
  return out.str();
}

Rational falling_factorial(const MultiIndex& j, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != j.dim()) throw ValidationError("falling factorial dimension mismatch");
  if (!j.is_nonnegative()) throw ValidationError("negative derivative order");
  Rational prod(1);
  for (int i = 0; i < j.dim(); ++i)
    for (int l = 0; l < j[i]; ++l) prod *= x[i] - l;
  return prod;
}

BigInt falling_factorial_int(const MultiIndex& j, const MultiIndex& alpha) {
  if (alpha.dim() != j.dim()) throw ValidationError("falling factorial dimension mismatch");
  if (!j.is_nonnegative()) throw ValidationError("negative derivative order");
  BigInt prod(1);
  for (int i = 0; i < j.dim(); ++i)
    for (int l = 0; l < j[i]; ++l) prod *= alpha[i] - l;
  return prod;
}

BigInt multi_binomial(const MultiIndex& j, const MultiIndex& l) {
  BigInt prod(1);
  for (int i = 0; i < j.dim(); ++i) {
    BigInt c;
    mpz_bin_uiui(c.get_mpz_t(), j[i], l[i]);
    prod *= c;
  }
  return prod;
}

}  // namespace polyrep
