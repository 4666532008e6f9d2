#include "polyrep/engine.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace polyrep {

const int kCascadeStepGuard = 12;

// ---------------------------------------------------------------------------
// Box

Box::Box(MultiIndex lo_, MultiIndex hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (lo.dim() != hi.dim()) throw ValidationError("box corner dimension mismatch");
  for (int i = 0; i < lo.dim(); ++i)
    if (lo[i] > hi[i]) throw ValidationError("box has lo > hi on axis " + std::to_string(i));
}

Box Box::cube(int dim, int radius) {
  if (radius < 0) throw ValidationError("cube radius must be >= 0");
  return Box(MultiIndex(std::vector<int>(dim, -radius)),
             MultiIndex(std::vector<int>(dim, radius)));
}

long Box::cell_count() const {
  __int128 count = 1;
  for (int i = 0; i < dim(); ++i) {
    count *= static_cast<__int128>(hi[i]) - lo[i] + 1;
    if (count > (static_cast<__int128>(1) << 33))
      throw ValidationError("grid too large: " + to_string());
  }
  return static_cast<long>(count);
}

bool Box::contains(const MultiIndex& idx) const {
  if (idx.dim() != dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (idx[i] < lo[i] || idx[i] > hi[i]) return false;
  return true;
}

bool Box::contains_box(const Box& inner) const {
  return contains(inner.lo) && contains(inner.hi);
}

std::optional<Box> Box::intersect(const Box& o) const {
  std::vector<int> l(dim()), h(dim());
  for (int i = 0; i < dim(); ++i) {
    l[i] = std::max(lo[i], o.lo[i]);
    h[i] = std::min(hi[i], o.hi[i]);
    if (l[i] > h[i]) return std::nullopt;
  }
  return Box(MultiIndex(std::move(l)), MultiIndex(std::move(h)));
}

std::string Box::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < dim(); ++i) {
    if (i) out << " x ";
    out << '[' << lo[i] << ".." << hi[i] << ']';
  }
  return out.str();
}

namespace {

MultiIndex unflatten(const Box& box, long flat) {
  std::vector<int> idx(box.dim());
  for (int i = box.dim() - 1; i >= 0; --i) {
    const long extent = box.hi[i] - box.lo[i] + 1;
    idx[i] = box.lo[i] + static_cast<int>(flat % extent);
    flat /= extent;
  }
  return MultiIndex(std::move(idx));
}

// Advances idx one step in row-major order; false once past hi.
bool advance(const Box& box, std::vector<int>& idx) {
  int i = box.dim() - 1;
  while (i >= 0 && idx[i] == box.hi[i]) {
    idx[i] = box.lo[i];
    --i;
  }
  if (i < 0) return false;
  ++idx[i];
  return true;
}

void parallel_ranges(long n, const std::function<void(long, long)>& body) {
  unsigned threads = std::thread::hardware_concurrency();
  threads = std::min(threads == 0 ? 1u : threads, 8u);
  if (threads <= 1 || n < (1L << 16)) {
    body(0, n);
    return;
  }
  const long chunk = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const long begin = t * chunk;
    const long end = std::min(n, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&body, &errors, t, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// GridData

GridData::GridData(Box box) : box_(std::move(box)) {
  values_.resize(box_.cell_count());
  trusted_ = box_;
}

GridData GridData::scaled(Box box, std::vector<std::int64_t> numerators, BigInt denominator) {
  if (static_cast<long>(numerators.size()) != box.cell_count())
    throw ValidationError("scaled grid size mismatch");
  if (denominator <= 0) throw ValidationError("scaled grid denominator must be positive");
  GridData g{ScaledTag{}, std::move(box)};
  g.num_ = std::move(numerators);
  g.den_ = std::move(denominator);
  g.scaled_rep_ = true;
  return g;
}

void GridData::set_trusted_box(std::optional<Box> trusted) {
  if (trusted && !box_.contains_box(*trusted))
    throw ValidationError("trusted box must lie inside the support box");
  trusted_ = std::move(trusted);
}

void GridData::set_zero_extended(bool value) { zero_extended_ = value; }

long GridData::offset_of(const MultiIndex& idx) const {
  long off = 0;
  for (int i = 0; i < box_.dim(); ++i) {
    off = off * (box_.hi[i] - box_.lo[i] + 1) + (idx[i] - box_.lo[i]);
  }
  return off;
}

Rational GridData::value(const MultiIndex& idx) const {
  if (!box_.contains(idx)) {
    if (zero_extended_) return Rational(0);
    throw ValidationError("index " + idx.to_string() + " outside grid box " + box_.to_string());
  }
  const long off = offset_of(idx);
  if (!scaled_rep_) return values_[off];
  Rational v{BigInt(num_[off]), den_};
  v.canonicalize();
  return v;
}

void GridData::set_value(const MultiIndex& idx, const Rational& v) {
  if (scaled_rep_) throw ValidationError("scaled grids are immutable");
  if (!box_.contains(idx))
    throw ValidationError("index " + idx.to_string() + " outside grid box " + box_.to_string());
  values_[offset_of(idx)] = v;
}

Rational GridData::total_sum() const {
  if (scaled_rep_) {
    BigInt acc(0);
    for (std::int64_t n : num_) acc += n;
    Rational sum(acc, den_);
    sum.canonicalize();
    return sum;
  }
  Rational sum(0);
  for (const Rational& v : values_) sum += v;
  return sum;
}

void GridData::for_each(const std::function<void(const MultiIndex&, const Rational&)>& fn) const {
  std::vector<int> cur(box_.lo.entries());
  long off = 0;
  do {
    const MultiIndex idx{std::vector<int>(cur)};
    if (scaled_rep_) {
      Rational v{BigInt(num_[off]), den_};
      v.canonicalize();
      fn(idx, v);
    } else {
      fn(idx, values_[off]);
    }
    ++off;
  } while (advance(box_, cur));
}

// ---------------------------------------------------------------------------
// PolyFunc

PolyFunc::PolyFunc(LaurentPoly terms) : poly_(std::move(terms)) {
  for (const auto& [exp, c] : poly_.terms())
    if (!exp.is_nonnegative())
      throw ValidationError("polynomial functions require nonnegative exponents");
}

PolyFunc PolyFunc::monomial(int dim, const MultiIndex& exponent) {
  return PolyFunc(LaurentPoly::monomial(dim, exponent));
}

PolyFunc PolyFunc::constant(int dim, const Rational& value) {
  return PolyFunc(LaurentPoly::constant(dim, value));
}

int PolyFunc::total_degree() const {
  long deg = 0;
  for (const auto& [exp, c] : poly_.terms()) deg = std::max(deg, exp.total_degree());
  return static_cast<int>(deg);
}

Rational PolyFunc::eval(const std::vector<Rational>& point) const { return poly_.eval(point); }

std::string PolyFunc::to_string() const { return poly_.to_string(); }

// ---------------------------------------------------------------------------
// Parametrization and sampling

GridData delta_grid(int dim) {
  GridData g{Box(MultiIndex::zeros(dim), MultiIndex::zeros(dim))};
  g.set_value(MultiIndex::zeros(dim), Rational(1));
  g.set_zero_extended(true);
  return g;
}

std::vector<Rational> param_point(const ParamShift& tau, int m, int r, const MultiIndex& alpha) {
  if (m > -2 && m < 2) throw ValidationError("dilation must satisfy |m| >= 2");
  if (r < 0) throw ValidationError("level must be >= 0");
  if (static_cast<int>(tau.size()) != alpha.dim())
    throw ValidationError("tau dimension mismatch");
  Rational geometric(0);
  for (int i = 1; i <= r; ++i) geometric += pow_rational(Rational(m), -i);
  const Rational scale = pow_rational(Rational(m), -static_cast<long>(r));
  std::vector<Rational> point;
  point.reserve(alpha.dim());
  for (int i = 0; i < alpha.dim(); ++i) point.push_back(-tau[i] * geometric + alpha[i] * scale);
  return point;
}

GridData sample_polynomial(const PolyFunc& pi, const ParamShift& tau, int m, int r,
                           const Box& box) {
  if (pi.dim() != box.dim()) throw ValidationError("polynomial/box dimension mismatch");
  GridData g{Box(box)};
  const std::vector<Rational> t0 = param_point(tau, m, r, MultiIndex::zeros(box.dim()));
  const Rational scale = pow_rational(Rational(m), -static_cast<long>(r));
  std::vector<int> cur(box.lo.entries());
  std::vector<Rational> point(box.dim());
  do {
    for (int i = 0; i < box.dim(); ++i) point[i] = t0[i] + cur[i] * scale;
    const MultiIndex idx{std::vector<int>(cur)};
    g.set_value(idx, pi.eval(point));
  } while (advance(box, cur));
  g.set_trusted_box(box);
  return g;
}

// ---------------------------------------------------------------------------
// Subdivision

namespace {

struct ScaledMask {
  std::vector<MultiIndex> exponents;
  std::vector<BigInt> numerators;
  BigInt denominator;  // common, positive
};

ScaledMask scale_mask(const Mask& mask) {
  ScaledMask out;
  out.denominator = 1;
  for (const auto& [exp, c] : mask.symbol().terms())
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(), c.get_den().get_mpz_t());
  for (const auto& [exp, c] : mask.symbol().terms()) {
    out.exponents.push_back(exp);
    out.numerators.push_back(c.get_num() * (out.denominator / c.get_den()));
  }
  return out;
}

Box output_box(const Mask& mask, const Box& in) {
  const int m = mask.dilation();
  const auto supp = mask.symbol().support_box();
  std::vector<int> lo(in.dim()), hi(in.dim());
  for (int i = 0; i < in.dim(); ++i) {
    const int a = std::min(m * in.lo[i], m * in.hi[i]);
    const int b = std::max(m * in.lo[i], m * in.hi[i]);
    lo[i] = a + (supp ? supp->first[i] : 0);
    hi[i] = b + (supp ? supp->second[i] : 0);
  }
  return Box(MultiIndex(std::move(lo)), MultiIndex(std::move(hi)));
}

// Outputs whose whole stencil lies inside `trusted_in`: per axis,
// [min(m tl, m th) + supp_hi, max(m tl, m th) + supp_lo].
std::optional<Box> trusted_after_step(const Mask& mask, const Box& trusted_in, const Box& out) {
  const auto supp = mask.symbol().support_box();
  if (!supp) return out;  // zero mask: every output is (vacuously) exact
  const int m = mask.dilation();
  std::vector<int> lo(out.dim()), hi(out.dim());
  for (int i = 0; i < out.dim(); ++i) {
    const int c1 = m * trusted_in.lo[i];
    const int c2 = m * trusted_in.hi[i];
    lo[i] = std::max(std::min(c1, c2) + supp->second[i], out.lo[i]);
    hi[i] = std::min(std::max(c1, c2) + supp->first[i], out.hi[i]);
    if (lo[i] > hi[i]) return std::nullopt;
  }
  return Box(MultiIndex(std::move(lo)), MultiIndex(std::move(hi)));
}

}  // namespace

GridData subdivide_once(const Mask& mask, const GridData& data) {
  if (mask.dim() != data.dim()) throw ValidationError("mask/data dimension mismatch");
  const Box in_box = data.box();
  const Box out_box = output_box(mask, in_box);
  const int s = mask.dim();
  const int m = mask.dilation();

  const ScaledMask sm = scale_mask(mask);

  // Common-denominator numerators of the input.
  BigInt in_den;
  std::vector<BigInt> in_num(in_box.cell_count());
  if (data.is_scaled()) {
    in_den = data.scaled_denominator();
    const auto& nums = data.scaled_numerators();
    for (long i = 0; i < in_box.cell_count(); ++i) in_num[i] = nums[i];
  } else {
    in_den = 1;
    data.for_each([&](const MultiIndex&, const Rational& v) {
      mpz_lcm(in_den.get_mpz_t(), in_den.get_mpz_t(), v.get_den().get_mpz_t());
    });
    long off = 0;
    data.for_each([&](const MultiIndex&, const Rational& v) {
      in_num[off++] = v.get_num() * (in_den / v.get_den());
    });
  }

  // Scatter: out[m beta + gamma] += A_gamma * d_beta.
  std::vector<BigInt> out_num(out_box.cell_count());
  std::vector<int> beta(in_box.lo.entries());
  long in_off = 0;
  std::vector<int> target(s);
  do {
    if (in_num[in_off] != 0) {
      for (std::size_t t = 0; t < sm.exponents.size(); ++t) {
        const MultiIndex& gamma = sm.exponents[t];
        for (int i = 0; i < s; ++i) target[i] = m * beta[i] + gamma[i];
        long off = 0;
        for (int i = 0; i < s; ++i)
          off = off * (out_box.hi[i] - out_box.lo[i] + 1) + (target[i] - out_box.lo[i]);
        mpz_addmul(out_num[off].get_mpz_t(), sm.numerators[t].get_mpz_t(),
                   in_num[in_off].get_mpz_t());
      }
    }
    ++in_off;
  } while (advance(in_box, beta));

  GridData out{Box(out_box)};
  const BigInt den = in_den * sm.denominator;
  {
    std::vector<int> cur(out_box.lo.entries());
    long off = 0;
    do {
      if (out_num[off] != 0) {
        Rational v(out_num[off], den);
        v.canonicalize();
        out.set_value(MultiIndex{std::vector<int>(cur)}, v);
      }
      ++off;
    } while (advance(out_box, cur));
  }

  if (data.zero_extended()) {
    out.set_zero_extended(true);
    out.set_trusted_box(out_box);
  } else {
    const Box trusted_in = data.trusted_box() ? *data.trusted_box() : in_box;
    out.set_trusted_box(trusted_after_step(mask, trusted_in, out_box));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Step-wise reproduction oracle

Box default_oracle_box(const Mask& mask) {
  return Box::cube(mask.dim(), mask.support_radius() + 2 * mask.modulus());
}

OracleReport stepwise_oracle(const Mask& mask, const PolyFunc& pi, const ParamShift& tau,
                             int r, const Box& box) {
  if (mask.dim() != pi.dim()) throw ValidationError("mask/polynomial dimension mismatch");
  const GridData level_r = sample_polynomial(pi, tau, mask.dilation(), r, box);
  const GridData stepped = subdivide_once(mask, level_r);
  if (!stepped.trusted_box())
    throw ValidationError(
        "stepwise oracle: trusted box is empty, the sample box is too small for the "
        "mask stencil; increase the box radius");
  const Box trusted = *stepped.trusted_box();
  const GridData expected =
      sample_polynomial(pi, tau, mask.dilation(), r + 1, trusted);

  OracleReport report;
  report.trusted = trusted;
  report.worst_residual = 0;
  std::vector<int> cur(trusted.lo.entries());
  do {
    const MultiIndex idx{std::vector<int>(cur)};
    const Rational residual = abs(stepped.value(idx) - expected.value(idx));
    ++report.cells_compared;
    if (residual > report.worst_residual) {
      report.worst_residual = residual;
      report.worst_index = idx;
    }
  } while (advance(trusted, cur));
  report.pass = report.worst_residual == 0;
  return report;
}

// ---------------------------------------------------------------------------
// Cascade

namespace {

constexpr std::int64_t kCascadeValueGuard = std::int64_t(1) << 62;
constexpr std::int64_t kCascadeMaskGuard = std::int64_t(1) << 31;

}  // namespace

GridData cascade(const Mask& mask, int r) {
  if (r < 0 || r > kCascadeStepGuard)
    throw ValidationError("cascade level must be in [0, " +
                          std::to_string(kCascadeStepGuard) + "]");
  const int s = mask.dim();
  const int m = mask.dilation();
  const int n = mask.modulus();

  const ScaledMask sm = scale_mask(mask);
  std::vector<std::int64_t> mask_num(sm.numerators.size());
  for (std::size_t t = 0; t < sm.numerators.size(); ++t) {
    if (!sm.numerators[t].fits_slong_p() ||
        std::abs(sm.numerators[t].get_si()) > kCascadeMaskGuard)
      throw std::overflow_error("mask numerators exceed the cascade range");
    mask_num[t] = sm.numerators[t].get_si();
  }

  // Mask terms grouped by residue class of their exponent, so the gather loop
  // touches exactly the stencil of each output cell.
  long residue_classes = 1;
  for (int i = 0; i < s; ++i) residue_classes *= n;
  std::vector<std::vector<std::pair<MultiIndex, std::int64_t>>> by_residue(residue_classes);
  for (std::size_t t = 0; t < sm.exponents.size(); ++t) {
    long key = 0;
    for (int i = 0; i < s; ++i)
      key = key * n + ((sm.exponents[t][i] % n) + n) % n;
    by_residue[key].emplace_back(sm.exponents[t], mask_num[t]);
  }

  Box box(MultiIndex::zeros(s), MultiIndex::zeros(s));
  std::vector<std::int64_t> values{1};
  BigInt den(1);

  for (int level = 0; level < r; ++level) {
    const Box out_box = output_box(mask, box);
    const long out_count = out_box.cell_count();
    std::vector<std::int64_t> out(out_count, 0);

    std::vector<long> in_stride(s, 1);
    for (int i = s - 2; i >= 0; --i)
      in_stride[i] = in_stride[i + 1] * (box.hi[i + 1] - box.lo[i + 1] + 1);

    const Box in_box = box;
    const std::vector<std::int64_t>& in = values;
    parallel_ranges(out_count, [&](long begin, long end) {
      if (begin >= end) return;
      MultiIndex alpha = unflatten(out_box, begin);
      std::vector<int> cur(alpha.entries());
      for (long flat = begin; flat < end; ++flat) {
        long key = 0;
        for (int i = 0; i < s; ++i) key = key * n + ((cur[i] % n) + n) % n;
        __int128 acc = 0;
        for (const auto& [gamma, a_num] : by_residue[key]) {
          long in_off = 0;
          bool inside = true;
          for (int i = 0; i < s; ++i) {
            const int beta_i = (cur[i] - gamma[i]) / m;
            if (beta_i < in_box.lo[i] || beta_i > in_box.hi[i]) { inside = false; break; }
            in_off += in_stride[i] * (beta_i - in_box.lo[i]);
          }
          if (inside) acc += static_cast<__int128>(a_num) * in[in_off];
        }
        if (acc > kCascadeValueGuard || acc < -kCascadeValueGuard)
          throw std::overflow_error("cascade value exceeds the exact 64-bit range");
        out[flat] = static_cast<std::int64_t>(acc);
        // Advance cur in row-major order (no-op past the final cell).
        int i = s - 1;
        while (i >= 0 && cur[i] == out_box.hi[i]) cur[i] = out_box.lo[i], --i;
        if (i >= 0) ++cur[i];
      }
    });

    box = out_box;
    values = std::move(out);
    den *= sm.denominator;
  }

  GridData result = GridData::scaled(box, std::move(values), den);
  result.set_zero_extended(true);
  result.set_trusted_box(box);
  return result;
}

}  // namespace polyrep
