#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyrep/analysis.hpp"
#include "polyrep/mask.hpp"
#include "polyrep/multi_index.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

/// Inclusive axis-aligned index box, lo <= hi componentwise.
struct Box {
  MultiIndex lo;
  MultiIndex hi;

  Box() = default;
  Box(MultiIndex lo_, MultiIndex hi_);
  static Box cube(int dim, int radius);  // [-radius, radius]^dim

  int dim() const { return lo.dim(); }
  long cell_count() const;
  bool contains(const MultiIndex& idx) const;
  bool contains_box(const Box& inner) const;
  std::optional<Box> intersect(const Box& o) const;
  std::string to_string() const;
};

/// Finite window of a data sequence: exact rational values, dense within the
/// support box. The trusted box marks outputs whose subdivision stencil was
/// fully covered by known input. zero_extended marks grids that represent the
/// entire sequence (zero off the box), e.g. the delta sequence; for those the
/// trusted region is the whole box.
///
/// Values are stored either directly or as 64-bit numerators over one shared
/// denominator (the cascade representation; compact for the large grids the
/// cascade produces). Both representations are exact.
class GridData {
public:
  explicit GridData(Box box);
  static GridData scaled(Box box, std::vector<std::int64_t> numerators,
                         BigInt denominator);

  const Box& box() const { return box_; }
  int dim() const { return box_.dim(); }
  const std::optional<Box>& trusted_box() const { return trusted_; }
  void set_trusted_box(std::optional<Box> trusted);
  bool zero_extended() const { return zero_extended_; }
  void set_zero_extended(bool value);

  Rational value(const MultiIndex& idx) const;
  void set_value(const MultiIndex& idx, const Rational& v);  // direct rep only

  /// Exact sum of all stored values.
  Rational total_sum() const;

  /// Visits every cell in row-major (lexicographic) index order.
  void for_each(const std::function<void(const MultiIndex&, const Rational&)>& fn) const;

  bool is_scaled() const { return scaled_rep_; }
  const std::vector<std::int64_t>& scaled_numerators() const { return num_; }
  const BigInt& scaled_denominator() const { return den_; }

  long offset_of(const MultiIndex& idx) const;

private:
  struct ScaledTag {};
  GridData(ScaledTag, Box box) : box_(std::move(box)) { trusted_ = box_; }

  Box box_;
  std::optional<Box> trusted_;
  bool zero_extended_ = false;
  bool scaled_rep_ = false;
  std::vector<Rational> values_;      // direct representation
  std::vector<std::int64_t> num_;     // scaled representation
  BigInt den_ = 1;
};

/// Polynomial function of s variables: nonnegative exponents only.
class PolyFunc {
public:
  explicit PolyFunc(LaurentPoly terms);
  static PolyFunc monomial(int dim, const MultiIndex& exponent);
  static PolyFunc constant(int dim, const Rational& value);

  int dim() const { return poly_.dim(); }
  const LaurentPoly& poly() const { return poly_; }
  int total_degree() const;
  Rational eval(const std::vector<Rational>& point) const;
  std::string to_string() const;

private:
  LaurentPoly poly_;
};

/// The delta sequence: 1 at the origin, zero elsewhere (zero-extended).
GridData delta_grid(int dim);

/// t^(r)_alpha = t^(r)_0 + alpha / m^r with t^(r)_0 = -tau * sum_{i=1..r} m^-i.
/// tau = 0 is the standard parametrization alpha / m^r.
std::vector<Rational> param_point(const ParamShift& tau, int m, int r,
                                  const MultiIndex& alpha);

/// Samples pi at the level-r parameter points over the box. Trusted box =
/// support box (every value is known).
GridData sample_polynomial(const PolyFunc& pi, const ParamShift& tau, int m, int r,
                           const Box& box);

/// One subdivision step: (S_a d)_alpha = sum_beta a_{alpha - m beta} d_beta.
/// Output box = m * input box + mask support box (Minkowski, signed m).
/// Output trusted box = indices whose whole stencil lies in the input trusted
/// box (input trusted box defaults to its support box); zero-extended inputs
/// stay zero-extended with full trust.
GridData subdivide_once(const Mask& mask, const GridData& data);

struct OracleReport {
  bool pass = false;
  Rational worst_residual;            // exact max |S_a d - samples|, 0 on pass
  std::optional<MultiIndex> worst_index;
  Box trusted;
  long cells_compared = 0;
};

/// Step-wise reproduction probe: samples pi at level r, applies the operator
/// once, and compares exactly against pi sampled at level r+1 on the trusted
/// box. Pass means the residual is exactly zero. Throws ValidationError when
/// the trusted box is empty (box too small for the mask stencil).
OracleReport stepwise_oracle(const Mask& mask, const PolyFunc& pi,
                             const ParamShift& tau, int r, const Box& box);

/// [-(R + 2|m|), R + 2|m|]^s with R the mask support radius; large enough for
/// a nonempty trusted box at r = 0 and one refinement.
Box default_oracle_box(const Mask& mask);

extern const int kCascadeStepGuard;  // 12

/// d^(r) = S_a^r delta, exact. The level-r values sample the basic limit
/// function on the level-r grid. Throws ValidationError for r outside
/// [0, kCascadeStepGuard] and std::overflow_error if a value leaves the
/// 64-bit numerator range of the compact representation.
GridData cascade(const Mask& mask, int r);

/// Delimited-text grid export: index tuple, exact value, float value, trusted
/// flag. An optional footer comment carries the exact value sum.
void write_grid_csv(std::ostream& out, const GridData& grid, bool sum_footer = false);

/// Reads the same column layout back (float/trusted columns optional).
/// Missing cells inside the bounding box are zero.
GridData read_grid_csv(std::istream& in);

/// 8-bit grayscale PGM of a 2-D grid, values scaled to [0, 255].
/// Rounding to double happens only here, at the rendering boundary.
void write_grid_pgm(std::ostream& out, const GridData& grid);

}  // namespace polyrep
