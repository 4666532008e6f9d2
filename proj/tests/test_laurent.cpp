#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polyrep/laurent.hpp"
#include "test_support.hpp"

using namespace polyrep;
using testing::Rng;

namespace {

LaurentPoly one_plus_z() {
  LaurentPoly p(1);
  p.add_term(MultiIndex{0}, Rational(1));
  p.add_term(MultiIndex{1}, Rational(1));
  return p;
}

// (1+z)^4 / 8
LaurentPoly cubic_spline_symbol() {
  LaurentPoly p = one_plus_z();
  LaurentPoly out = p * p;
  out = out * out;
  return out.scaled(make_rational(1, 8));
}

}  // namespace

TEST_CASE("add: identity, cancellation, canonical sparsity") {
  const LaurentPoly p = one_plus_z();
  const LaurentPoly zero(1);
  CHECK(p + zero == p);

  LaurentPoly z = LaurentPoly::monomial(1, MultiIndex{1});
  LaurentPoly neg_z = LaurentPoly::monomial(1, MultiIndex{1}, Rational(-1));
  const LaurentPoly sum = z + neg_z;
  CHECK(sum.is_zero());
  CHECK(sum.term_count() == 0);  // cancelled term must be pruned

  CHECK_THROWS_AS(p + LaurentPoly(2), ValidationError);
}

TEST_CASE("mul: binomial square") {
  const LaurentPoly sq = one_plus_z() * one_plus_z();
  CHECK(sq.term_count() == 3);
  CHECK(sq.coefficient(MultiIndex{0}) == 1);
  CHECK(sq.coefficient(MultiIndex{1}) == 2);
  CHECK(sq.coefficient(MultiIndex{2}) == 1);
}

TEST_CASE("mul/eval homomorphism on random polynomials") {
  Rng rng(0x1a2b3c01);
  for (int trial = 0; trial < 60; ++trial) {
    const int dim = rng.uniform(1, 3);
    const LaurentPoly p = rng.laurent(dim, 6, 3);
    const LaurentPoly q = rng.laurent(dim, 6, 3);
    std::vector<Rational> x;
    for (int i = 0; i < dim; ++i) x.push_back(rng.nonzero_rational(5, 5));
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
  }
}

TEST_CASE("monomial_shift") {
  const LaurentPoly p = one_plus_z();
  CHECK(p.monomial_shift(MultiIndex{0}) == p);

  const LaurentPoly shifted = p.monomial_shift(MultiIndex{1});
  CHECK(shifted.coefficient(MultiIndex{1}) == 1);
  CHECK(shifted.coefficient(MultiIndex{2}) == 1);
  CHECK(shifted.term_count() == 2);
}

TEST_CASE("partial_derivative: order zero and the univariate anchor") {
  const LaurentPoly p = cubic_spline_symbol();
  CHECK(p.partial_derivative(MultiIndex{0}) == p);

  // d/dz (1+z)^4/8 at 1 = (4/8)(1+1)^3 = 4
  const LaurentPoly d1 = p.partial_derivative(MultiIndex{1});
  CHECK(d1.eval(std::vector<Rational>{Rational(1)}) == 4);

  CHECK_THROWS_AS(p.partial_derivative(MultiIndex{-1}), ValidationError);
}

TEST_CASE("partial_derivative equals repeated first derivatives") {
  Rng rng(0x1a2b3c02);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = rng.uniform(1, 2);
    const LaurentPoly p = rng.laurent(dim, 6, 3);
    const MultiIndex j = rng.nonneg_multi_index(dim, 3);
    LaurentPoly repeated = p;
    for (int i = 0; i < dim; ++i)
      for (int t = 0; t < j[i]; ++t)
        repeated = repeated.partial_derivative(MultiIndex::unit(dim, i));
    CHECK(p.partial_derivative(j) == repeated);
  }
}

TEST_CASE("Leibniz rule for first-order derivatives") {
  Rng rng(0x1a2b3c03);
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = rng.uniform(1, 3);
    const LaurentPoly p = rng.laurent(dim, 5, 3);
    const LaurentPoly q = rng.laurent(dim, 5, 3);
    const int axis = rng.uniform(0, dim - 1);
    const MultiIndex e = MultiIndex::unit(dim, axis);
    CHECK((p * q).partial_derivative(e) ==
          p.partial_derivative(e) * q + p * q.partial_derivative(e));
  }
}

TEST_CASE("derivative of a shifted polynomial expands binomially at 1") {
  // D^j (z^alpha p)(1) = sum_{l <= j} C(j,l) q_l(alpha) D^(j-l) p(1)
  Rng rng(0x1a2b3c04);
  const std::vector<Rational> ones_1{Rational(1)};
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = rng.uniform(1, 2);
    const std::vector<Rational> ones(dim, Rational(1));
    const LaurentPoly p = rng.laurent(dim, 5, 2);
    const MultiIndex alpha = rng.multi_index(dim, -3, 3);
    const MultiIndex j = rng.nonneg_multi_index(dim, 3);

    const Rational lhs = p.monomial_shift(alpha).partial_derivative(j).eval(ones);

    Rational rhs(0);
    for (const MultiIndex& l : multi_indices_up_to_degree(dim, static_cast<int>(j.total_degree()))) {
      if (!l.leq_componentwise(j)) continue;
      rhs += Rational(multi_binomial(j, l)) * Rational(falling_factorial_int(l, alpha)) *
             p.partial_derivative(j - l).eval(ones);
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("eval: basics and the zero/negative-exponent error") {
  CHECK(one_plus_z().eval(std::vector<Rational>{Rational(1)}) == 2);

  LaurentPoly inv = LaurentPoly::monomial(1, MultiIndex{-2});
  CHECK(inv.eval(std::vector<Rational>{make_rational(1, 2)}) == 4);
  CHECK_THROWS_AS(inv.eval(std::vector<Rational>{Rational(0)}), ValidationError);

  // 0^0 = 1 under the polynomial convention
  CHECK(one_plus_z().eval(std::vector<Rational>{Rational(0)}) == 1);
}

TEST_CASE("substitute_monomial_map: identity, power map, eval consistency") {
  const LaurentPoly p = one_plus_z();
  CHECK(p.substitute_monomial_map({{1}}) == p);

  const LaurentPoly sq = p.substitute_monomial_map({{2}});
  CHECK(sq.coefficient(MultiIndex{0}) == 1);
  CHECK(sq.coefficient(MultiIndex{2}) == 1);

  CHECK_THROWS_AS(p.substitute_monomial_map({{1}, {2}}), ValidationError);

  Rng rng(0x1a2b3c05);
  for (int trial = 0; trial < 30; ++trial) {
    const LaurentPoly q = rng.laurent(2, 6, 2);
    std::vector<std::vector<int>> M(2, std::vector<int>(2));
    for (auto& row : M)
      for (int& v : row) v = rng.uniform(-2, 2);
    std::vector<Rational> x{rng.nonzero_rational(4, 4), rng.nonzero_rational(4, 4)};
    // images of the variables under the substitution, evaluated at x
    std::vector<Rational> images(2, Rational(1));
    for (int i = 0; i < 2; ++i)
      for (int l = 0; l < 2; ++l) images[i] *= pow_rational(x[l], M[l][i]);
    CHECK(q.substitute_monomial_map(M).eval(x) == q.eval(images));
  }
}

TEST_CASE("no operation leaves a zero coefficient behind") {
  Rng rng(0x1a2b3c06);
  auto assert_canonical = [](const LaurentPoly& p) {
    for (const auto& [exp, c] : p.terms()) {
      CHECK(c != 0);
      CHECK(exp.dim() == p.dim());
    }
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = rng.uniform(1, 2);
    const LaurentPoly p = rng.laurent(dim, 6, 2);
    const LaurentPoly q = rng.laurent(dim, 6, 2);
    assert_canonical(p + q);
    assert_canonical(p - q);
    assert_canonical(p * q);
    assert_canonical(p - p);
    assert_canonical(p.scaled(Rational(0)));
    assert_canonical(p.partial_derivative(rng.nonneg_multi_index(dim, 2)));
  }
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(MultiIndex{0, 0}, {Rational(7), Rational(9)}) == 1);
  CHECK(falling_factorial_int(MultiIndex{2}, MultiIndex{5}) == 20);  // 5*4
  CHECK(falling_factorial_int(MultiIndex{3}, MultiIndex{2}) == 0);   // hits (2-2)
  CHECK(falling_factorial(MultiIndex{1, 1}, {Rational(2), Rational(2)}) == 4);
}
