#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyrep/analysis.hpp"
#include "polyrep/laurent.hpp"
#include "polyrep/mask.hpp"

namespace polyrep {

/// s x n integer direction matrix, columns are directions; n >= s and
/// rank s required where stated.
struct DirectionMatrix {
  std::vector<std::vector<int>> rows;  // rows.size() == s, rows[i].size() == n

  int dim() const { return static_cast<int>(rows.size()); }
  int cols() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
  MultiIndex column(int j) const;
  bool has_full_rank() const;
  std::string to_string() const;
};

/// Box-spline mask: m = 2, symbol 2^s prod_theta (1 + z^theta)/2.
/// Throws ValidationError for ragged or rank-deficient matrices.
Mask box_spline(const DirectionMatrix& directions);

/// tau = (1/2)(sum of first coordinates, ..., sum of last coordinates).
ParamShift box_spline_tau(const DirectionMatrix& directions);

/// Every s x s column submatrix has determinant in {-1, 0, +1} and at least
/// one is nonzero. Repeated directions give zero minors, so only nonzero
/// minors are constrained. Used as the non-singularity proxy for box splines.
bool is_unimodular(const DirectionMatrix& directions);

/// Direction matrix of the bivariate three-direction family: e1 (k times),
/// e2 (l times), e1+e2 (n times).
DirectionMatrix three_directional_matrix(int k, int l, int n);

/// B_{k,l,n}(z1,z2) = 4 ((1+z1)/2)^k ((1+z2)/2)^l ((1+z1 z2)/2)^n, m = 2.
Mask three_directional(int k, int l, int n);

/// Univariate cubic B-spline, symbol (1+z)^4 / 8, m = 2.
Mask cubic_bspline();

/// Dubuc-Deslauriers 4-point scheme, symbol (-z^-3 + 9z^-1 + 16 + 9z - z^3)/16.
Mask dubuc_deslauriers_4pt();

/// Butterfly scheme: interpolatory, m = 2, s = 2, built from the
/// three-direction factor products with the z1^-3 z2^-3 prefactor.
Mask butterfly();

/// The trivariate five-term bracket scheme, m = 2, s = 3.
Mask three_dim_example();

/// The 12-term bivariate sqrt(3) base symbol (value 3 at the all-ones point).
LaurentPoly sqrt3_base();

/// Iterated sqrt(3) mask: m = -3, symbol a(z1 z2^-2, z1^2 z2^-1) * a(z).
Mask sqrt3_iterated();

struct BuiltinScheme {
  std::string name;
  std::string description;
  Mask (*make)();
  /// Set for box-spline constructions; enables the unimodularity proxy.
  std::optional<DirectionMatrix> directions;
};

const std::vector<BuiltinScheme>& builtin_schemes();
std::optional<Mask> make_builtin(const std::string& name);
const BuiltinScheme* find_builtin(const std::string& name);

}  // namespace polyrep
