#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "polyrep/mask.hpp"
#include "polyrep/schemes.hpp"
#include "test_support.hpp"

using namespace polyrep;
using testing::Rng;

namespace {

Mask delta_mask(int dim, int dilation) {
  return Mask(dilation, LaurentPoly::constant(dim, Rational(1)));
}

}  // namespace

TEST_CASE("coset representatives in graded-lex order") {
  const Mask m1 = delta_mask(1, 2);
  CHECK(m1.coset_reps() == std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{1}});

  const Mask m2 = delta_mask(2, 2);
  CHECK(m2.coset_reps() == std::vector<MultiIndex>{MultiIndex{0, 0}, MultiIndex{0, 1},
                                                   MultiIndex{1, 0}, MultiIndex{1, 1}});

  const Mask m3 = delta_mask(1, -3);
  CHECK(m3.coset_reps() ==
        std::vector<MultiIndex>{MultiIndex{0}, MultiIndex{1}, MultiIndex{2}});
}

TEST_CASE("subsymbols of the cubic B-spline split even and odd") {
  const Mask spline = cubic_bspline();
  const LaurentPoly even = spline.subsymbol(MultiIndex{0});
  const LaurentPoly odd = spline.subsymbol(MultiIndex{1});

  CHECK(even.coefficient(MultiIndex{0}) == make_rational(1, 8));
  CHECK(even.coefficient(MultiIndex{2}) == make_rational(6, 8));
  CHECK(even.coefficient(MultiIndex{4}) == make_rational(1, 8));
  CHECK(even.term_count() == 3);
  CHECK(odd.coefficient(MultiIndex{1}) == make_rational(4, 8));
  CHECK(odd.coefficient(MultiIndex{3}) == make_rational(4, 8));
  CHECK(odd.term_count() == 2);

  // sum rules of order one, submask form
  CHECK(even.eval_at_ones() == 1);
  CHECK(odd.eval_at_ones() == 1);

  CHECK_THROWS_AS(spline.subsymbol(MultiIndex{2}), ValidationError);
  CHECK_THROWS_AS(spline.subsymbol(MultiIndex{-1}), ValidationError);
}

TEST_CASE("delta mask subsymbols") {
  const Mask delta = delta_mask(1, 2);
  CHECK(delta.subsymbol(MultiIndex{0}) == LaurentPoly::constant(1, Rational(1)));
  CHECK(delta.subsymbol(MultiIndex{1}).is_zero());
}

TEST_CASE("subsymbols decompose the full symbol and partition its support") {
  Rng rng(0x3c4d5e01);
  std::vector<Mask> masks;
  for (const BuiltinScheme& s : builtin_schemes()) masks.push_back(s.make());
  for (int trial = 0; trial < 10; ++trial)
    masks.emplace_back(trial % 2 ? 3 : -2, rng.laurent(2, 8, 4));

  for (const Mask& mask : masks) {
    LaurentPoly sum(mask.dim());
    long term_total = 0;
    for (const MultiIndex& e : mask.coset_reps()) {
      const LaurentPoly sub = mask.subsymbol(e);
      sum = sum + sub;
      term_total += sub.term_count();
    }
    CHECK(sum == mask.symbol());
    CHECK(term_total == mask.symbol().term_count());  // cosets partition the support
  }
}

TEST_CASE("subsymbol values at the all-ones point are 1 on convergent schemes") {
  for (const BuiltinScheme& s : builtin_schemes()) {
    const Mask mask = s.make();
    for (const MultiIndex& e : mask.coset_reps())
      CHECK(mask.subsymbol(e).eval_at_ones() == 1);
  }
}

TEST_CASE("interpolatory detection") {
  CHECK(butterfly().is_interpolatory());
  CHECK(dubuc_deslauriers_4pt().is_interpolatory());
  CHECK(!cubic_bspline().is_interpolatory());  // a_0 = 1/8
  CHECK(delta_mask(2, 2).is_interpolatory());

  // Shifting can destroy the interpolatory pattern, and shifting back restores it.
  const Mask b = butterfly();
  const Mask shifted = b.shifted(MultiIndex{3, 3});
  CHECK(!shifted.is_interpolatory());
  CHECK(shifted.shifted(MultiIndex{-3, -3}).is_interpolatory());
}

TEST_CASE("shift_mask keeps dilation and translates support") {
  const Mask b = butterfly();
  CHECK(b.shifted(MultiIndex{0, 0}).symbol() == b.symbol());
  const Mask shifted = b.shifted(MultiIndex{3, 3});
  CHECK(shifted.dilation() == 2);
  const auto box = shifted.symbol().support_box();
  REQUIRE(box.has_value());
  CHECK(box->first.is_nonnegative());  // the printed form carries z1^-3 z2^-3
}

TEST_CASE("mask document round trip on every built-in scheme") {
  for (const BuiltinScheme& s : builtin_schemes()) {
    const Mask mask = s.make();
    std::ostringstream out;
    write_mask(out, mask);
    std::istringstream in(out.str());
    const Mask back = read_mask(in);
    CHECK(back.dilation() == mask.dilation());
    CHECK(back.symbol() == mask.symbol());

    // the writer is deterministic, so a second pass is byte identical
    std::ostringstream again;
    write_mask(again, back);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("mask document parsing errors") {
  auto read_str = [](const std::string& text) {
    std::istringstream in(text);
    return read_mask(in);
  };

  CHECK_THROWS_AS(read_str("not json"), ParseError);
  CHECK_THROWS_AS(read_str("{}"), ParseError);

  // "1/6" parses exactly
  const Mask ok = read_str(R"({"dimension": 1, "dilation": 2,
    "coefficients": [{"index": [0], "value": "1/6"}]})");
  CHECK(ok.symbol().coefficient(MultiIndex{0}) == make_rational(1, 6));

  // |m| >= 2 enforced
  CHECK_THROWS_AS(read_str(R"({"dimension": 1, "dilation": 1,
    "coefficients": [{"index": [0], "value": "1"}]})"),
                  ValidationError);

  // ragged index
  CHECK_THROWS_AS(read_str(R"({"dimension": 2, "dilation": 2,
    "coefficients": [{"index": [0], "value": "1"}]})"),
                  ValidationError);

  // zero denominator
  CHECK_THROWS_AS(read_str(R"({"dimension": 1, "dilation": 2,
    "coefficients": [{"index": [0], "value": "1/0"}]})"),
                  ValidationError);

  // duplicate index
  CHECK_THROWS_AS(read_str(R"({"dimension": 1, "dilation": 2, "coefficients":
    [{"index": [0], "value": "1"}, {"index": [0], "value": "2"}]})"),
                  ValidationError);
}

TEST_CASE("non-canonical rationals are normalized on read") {
  std::istringstream in(R"({"dimension": 1, "dilation": 2,
    "coefficients": [{"index": [1], "value": "2/4"}]})");
  const Mask mask = read_mask(in);
  CHECK(mask.symbol().coefficient(MultiIndex{1}) == make_rational(1, 2));
}
