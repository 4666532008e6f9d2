#include "polyrep/schemes.hpp"

#include <algorithm>
#include <sstream>

#include "polyrep/rational.hpp"

namespace polyrep {

MultiIndex DirectionMatrix::column(int j) const {
  std::vector<int> col(dim());
  for (int i = 0; i < dim(); ++i) col[i] = rows[i].at(j);
  return MultiIndex(std::move(col));
}

namespace {

void check_rectangular(const DirectionMatrix& dirs) {
  if (dirs.dim() < 1) throw ValidationError("direction matrix needs at least one row");
  const int n = dirs.cols();
  for (const auto& row : dirs.rows)
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("direction matrix is ragged");
  if (n < dirs.dim())
    throw ValidationError("direction matrix needs at least s columns");
}

BigInt determinant(std::vector<std::vector<BigInt>> a) {
  // Fraction-free (Bareiss) elimination.
  const int n = static_cast<int>(a.size());
  BigInt prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { pivot = i; break; }
      if (pivot < 0) return BigInt(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

template <typename Visit>
void for_each_column_subset(int n, int s, Visit visit) {
  std::vector<int> pick(s);
  for (int i = 0; i < s; ++i) pick[i] = i;
  for (;;) {
    visit(pick);
    int i = s - 1;
    while (i >= 0 && pick[i] == n - s + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

BigInt minor_of(const DirectionMatrix& dirs, const std::vector<int>& cols) {
  const int s = dirs.dim();
  std::vector<std::vector<BigInt>> sub(s, std::vector<BigInt>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) sub[i][j] = dirs.rows[i][cols[j]];
  return determinant(std::move(sub));
}

}  // namespace

bool DirectionMatrix::has_full_rank() const {
  check_rectangular(*this);
  bool found = false;
  for_each_column_subset(cols(), dim(), [&](const std::vector<int>& pick) {
    if (!found && minor_of(*this, pick) != 0) found = true;
  });
  return found;
}

std::string DirectionMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < dim(); ++i) {
    out << (i ? "; " : "[");
    for (int j = 0; j < cols(); ++j) {
      if (j) out << ' ';
      out << rows[i][j];
    }
  }
  out << ']';
  return out.str();
}

Mask box_spline(const DirectionMatrix& directions) {
  check_rectangular(directions);
  if (!directions.has_full_rank())
    throw ValidationError("direction matrix must have rank s");
  const int s = directions.dim();
  LaurentPoly symbol = LaurentPoly::constant(s, pow_rational(Rational(2), s));
  const Rational half = make_rational(1, 2);
  for (int j = 0; j < directions.cols(); ++j) {
    LaurentPoly factor = LaurentPoly::constant(s, half);
    factor.add_term(directions.column(j), half);
    symbol = symbol * factor;
  }
  return Mask(2, std::move(symbol));
}

ParamShift box_spline_tau(const DirectionMatrix& directions) {
  check_rectangular(directions);
  ParamShift tau;
  for (int i = 0; i < directions.dim(); ++i) {
    long sum = 0;
    for (int j = 0; j < directions.cols(); ++j) sum += directions.rows[i][j];
    tau.push_back(make_rational(sum, 2));
  }
  return tau;
}

bool is_unimodular(const DirectionMatrix& directions) {
  check_rectangular(directions);
  bool any_nonzero = false;
  bool all_small = true;
  for_each_column_subset(directions.cols(), directions.dim(), [&](const std::vector<int>& pick) {
    const BigInt det = minor_of(directions, pick);
    if (det != 0) any_nonzero = true;
    if (det > 1 || det < -1) all_small = false;
  });
  return any_nonzero && all_small;
}

DirectionMatrix three_directional_matrix(int k, int l, int n) {
  if (k < 0 || l < 0 || n < 0) throw ValidationError("multiplicities must be >= 0");
  DirectionMatrix dirs;
  dirs.rows.assign(2, {});
  for (int t = 0; t < k; ++t) { dirs.rows[0].push_back(1); dirs.rows[1].push_back(0); }
  for (int t = 0; t < l; ++t) { dirs.rows[0].push_back(0); dirs.rows[1].push_back(1); }
  for (int t = 0; t < n; ++t) { dirs.rows[0].push_back(1); dirs.rows[1].push_back(1); }
  return dirs;
}

namespace {

// ((1 + z^theta)/2)^power in s variables.
LaurentPoly half_factor(int s, const MultiIndex& theta, int power) {
  LaurentPoly factor = LaurentPoly::constant(s, make_rational(1, 2));
  factor.add_term(theta, make_rational(1, 2));
  LaurentPoly out = LaurentPoly::constant(s, Rational(1));
  for (int t = 0; t < power; ++t) out = out * factor;
  return out;
}

// The three-direction product without the 2^s normalization:
// ((1+z1)/2)^k ((1+z2)/2)^l ((1+z1 z2)/2)^n.
LaurentPoly three_dir_product(int k, int l, int n) {
  LaurentPoly out = half_factor(2, MultiIndex{1, 0}, k);
  out = out * half_factor(2, MultiIndex{0, 1}, l);
  out = out * half_factor(2, MultiIndex{1, 1}, n);
  return out;
}

}  // namespace

Mask three_directional(int k, int l, int n) {
  // B_{k,l,n} is defined for any multiplicities; degenerate choices are valid
  // symbols even when the stacked direction matrix is rank deficient.
  return Mask(2, three_dir_product(k, l, n).scaled(Rational(4)));
}

Mask cubic_bspline() {
  DirectionMatrix dirs;
  dirs.rows = {{1, 1, 1, 1}};
  return box_spline(dirs);
}

Mask dubuc_deslauriers_4pt() {
  LaurentPoly symbol(1);
  symbol.add_term(MultiIndex{-3}, make_rational(-1, 16));
  symbol.add_term(MultiIndex{-1}, make_rational(9, 16));
  symbol.add_term(MultiIndex{0}, Rational(1));
  symbol.add_term(MultiIndex{1}, make_rational(9, 16));
  symbol.add_term(MultiIndex{3}, make_rational(-1, 16));
  return Mask(2, std::move(symbol));
}

Mask butterfly() {
  // 4 z1^-3 z2^-3 [7 z1 z2 P222 - 2 z1 P133 - 2 z2 P313 - 2 z1 z2 P331] with
  // P_{k,l,n} the normalized three-direction products; the bracket restores
  // a(1) = 4 and the interpolatory coefficient pattern.
  LaurentPoly bracket =
      three_dir_product(2, 2, 2).monomial_shift(MultiIndex{1, 1}).scaled(Rational(7));
  bracket = bracket - three_dir_product(1, 3, 3).monomial_shift(MultiIndex{1, 0}).scaled(Rational(2));
  bracket = bracket - three_dir_product(3, 1, 3).monomial_shift(MultiIndex{0, 1}).scaled(Rational(2));
  bracket = bracket - three_dir_product(3, 3, 1).monomial_shift(MultiIndex{1, 1}).scaled(Rational(2));
  LaurentPoly symbol = bracket.scaled(Rational(4)).monomial_shift(MultiIndex{-3, -3});
  return Mask(2, std::move(symbol));
}

Mask three_dim_example() {
  const MultiIndex e1{1, 0, 0};
  const MultiIndex e2{0, 1, 0};
  const MultiIndex e3{0, 0, 1};
  const MultiIndex e123{1, 1, 1};
  auto term = [&](const MultiIndex& shift, const Rational& c, int p1, int p2, int p3, int p123) {
    LaurentPoly t = half_factor(3, e1, p1);
    t = t * half_factor(3, e2, p2);
    t = t * half_factor(3, e3, p3);
    t = t * half_factor(3, e123, p123);
    return t.monomial_shift(shift).scaled(c);
  };
  const Rational five_quarters = make_rational(5, 4);
  LaurentPoly bracket = term(e123, Rational(6), 2, 2, 2, 2);
  bracket = bracket - term(e1, five_quarters, 1, 3, 3, 3);
  bracket = bracket - term(e2, five_quarters, 3, 1, 3, 3);
  bracket = bracket - term(e3, five_quarters, 3, 3, 1, 3);
  bracket = bracket - term(e123, five_quarters, 3, 3, 3, 1);
  return Mask(2, bracket.scaled(Rational(8)));
}

LaurentPoly sqrt3_base() {
  LaurentPoly base(2);
  const Rational sixth = make_rational(1, 6);
  const Rational third = make_rational(1, 3);
  for (const MultiIndex& e :
       {MultiIndex{1, 1}, MultiIndex{-1, -1}, MultiIndex{-1, 2}, MultiIndex{-2, 1},
        MultiIndex{1, -2}, MultiIndex{2, -1}})
    base.add_term(e, sixth);
  for (const MultiIndex& e : {MultiIndex{-1, 0}, MultiIndex{0, 1}, MultiIndex{1, -1}})
    base.add_term(e, third);
  for (const MultiIndex& e : {MultiIndex{0, -1}, MultiIndex{1, 0}, MultiIndex{-1, 1}})
    base.add_term(e, third);
  return base;
}

Mask sqrt3_iterated() {
  const LaurentPoly base = sqrt3_base();
  // z1 -> z1 z2^-2, z2 -> z1^2 z2^-1 (columns are the image exponent vectors).
  const std::vector<std::vector<int>> subst{{1, 2}, {-2, -1}};
  return Mask(-3, base.substitute_monomial_map(subst) * base);
}

const std::vector<BuiltinScheme>& builtin_schemes() {
  static const std::vector<BuiltinScheme> schemes = [] {
    std::vector<BuiltinScheme> list;
    list.push_back({"cubic_bspline", "univariate cubic B-spline, symbol (1+z)^4/8, m = 2",
                    &cubic_bspline, DirectionMatrix{{{1, 1, 1, 1}}}});
    list.push_back({"b222", "three-direction box spline B_{2,2,2}, m = 2",
                    [] { return three_directional(2, 2, 2); },
                    three_directional_matrix(2, 2, 2)});
    list.push_back({"butterfly", "interpolatory butterfly scheme, m = 2", &butterfly,
                    std::nullopt});
    list.push_back({"dd4", "Dubuc-Deslauriers 4-point interpolatory scheme, m = 2",
                    &dubuc_deslauriers_4pt, std::nullopt});
    list.push_back({"three_dim", "trivariate five-term bracket scheme, m = 2",
                    &three_dim_example, std::nullopt});
    list.push_back({"sqrt3_iterated", "iterated sqrt(3) scheme, m = -3", &sqrt3_iterated,
                    std::nullopt});
    return list;
  }();
  return schemes;
}

const BuiltinScheme* find_builtin(const std::string& name) {
  for (const BuiltinScheme& s : builtin_schemes())
    if (s.name == name) return &s;
  return nullptr;
}

std::optional<Mask> make_builtin(const std::string& name) {
  const BuiltinScheme* s = find_builtin(name);
  if (!s) return std::nullopt;
  return s->make();
}

}  // namespace polyrep
