#include "polyrep/analysis.hpp"

#include <sstream>

#include "polyrep/cyclotomic.hpp"
#include "polyrep/laurent.hpp"

namespace polyrep {

const int kDefaultDegreeCap = 10;

Rational q_eval(const MultiIndex& j, const std::vector<Rational>& x) {
  return falling_factorial(j, x);
}

std::string ConditionWitness::describe() const {
  std::ostringstream out;
  switch (kind) {
    case ConditionKind::SumValue:
      out << "a(1) = " << lhs << ", expected |m|^s = " << rhs;
      break;
    case ConditionKind::EpsilonDerivative:
      out << "D^" << j.to_string() << " a(eps_e) = " << lhs << " != 0 at coset e = "
          << coset->to_string();
      break;
    case ConditionKind::OnePointDerivative:
      out << "D^" << j.to_string() << " a(1) = " << lhs << ", expected |m|^s q_j(tau) = " << rhs;
      break;
  }
  return out.str();
}

namespace {

Rational modulus_power(const Mask& mask) {
  return pow_rational(Rational(mask.modulus()), mask.dim());
}

ConditionWitness sum_value_witness(const Mask& mask, const Rational& value) {
  ConditionWitness w;
  w.kind = ConditionKind::SumValue;
  w.j = MultiIndex::zeros(mask.dim());
  w.lhs = rational_to_string(value);
  w.rhs = rational_to_string(modulus_power(mask));
  return w;
}

std::vector<MultiIndex> nonzero_cosets(const Mask& mask) {
  std::vector<MultiIndex> cosets = mask.coset_reps();
  cosets.erase(cosets.begin());  // drop 0, first by construction
  return cosets;
}

// Checks D^j a(eps_e) == 0 for every nonzero coset, returning the first
// failing coset with the exact value rendered.
std::optional<ConditionWitness> epsilon_conditions_at(const Mask& mask, const MultiIndex& j,
                                                      const std::vector<MultiIndex>& cosets) {
  const LaurentPoly deriv = mask.symbol().partial_derivative(j);
  for (const MultiIndex& e : cosets) {
    const CycloElement value = eval_symbol_at_coset(deriv, mask.dilation(), e);
    if (!value.is_zero()) {
      ConditionWitness w;
      w.kind = ConditionKind::EpsilonDerivative;
      w.j = j;
      w.coset = e;
      w.lhs = value.to_string();
      w.rhs = "0";
      return w;
    }
  }
  return std::nullopt;
}

// Checks D^j a(1) == |m|^s q_j(tau).
std::optional<ConditionWitness> one_point_condition_at(const Mask& mask, const MultiIndex& j,
                                                       const ParamShift& tau) {
  const Rational lhs = mask.symbol().partial_derivative(j).eval_at_ones();
  const Rational rhs = modulus_power(mask) * q_eval(j, tau);
  if (lhs == rhs) return std::nullopt;
  ConditionWitness w;
  w.kind = ConditionKind::OnePointDerivative;
  w.j = j;
  w.lhs = rational_to_string(lhs);
  w.rhs = rational_to_string(rhs);
  return w;
}

}  // namespace

CheckResult check_Z(const Mask& mask, int k) {
  if (k < 1) throw ValidationError("zero condition order must be >= 1");
  CheckResult res;
  const Rational value = mask.symbol().eval_at_ones();
  if (value != modulus_power(mask)) {
    res.witness = sum_value_witness(mask, value);
    return res;
  }
  const auto cosets = nonzero_cosets(mask);
  for (int d = 0; d < k; ++d) {
    for (const MultiIndex& j : multi_indices_of_degree(mask.dim(), d)) {
      if (auto w = epsilon_conditions_at(mask, j, cosets)) {
        res.witness = std::move(w);
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

CheckResult submask_derivative_consistency(const Mask& mask, int k) {
  if (k < 1) throw ValidationError("order must be >= 1");
  CheckResult res;
  const Rational value = mask.symbol().eval_at_ones();
  if (value != modulus_power(mask)) {
    res.witness = sum_value_witness(mask, value);
    return res;
  }
  const Rational scale = 1 / modulus_power(mask);
  for (int d = 0; d < k; ++d) {
    for (const MultiIndex& j : multi_indices_of_degree(mask.dim(), d)) {
      const Rational full = mask.symbol().partial_derivative(j).eval_at_ones();
      for (const MultiIndex& e : mask.coset_reps()) {
        const Rational sub = mask.subsymbol(e).partial_derivative(j).eval_at_ones();
        if (sub != scale * full) {
          ConditionWitness w;
          w.kind = ConditionKind::OnePointDerivative;
          w.j = j;
          w.coset = e;
          w.lhs = rational_to_string(sub);
          w.rhs = rational_to_string(scale * full);
          res.witness = std::move(w);
          return res;
        }
      }
    }
  }
  res.ok = true;
  return res;
}

DegreeSearch generation_degree(const Mask& mask, int cap) {
  if (cap < 0) throw ValidationError("degree cap must be >= 0");
  DegreeSearch out;
  const Rational value = mask.symbol().eval_at_ones();
  if (value != modulus_power(mask)) {
    out.witness = sum_value_witness(mask, value);
    return out;
  }
  const auto cosets = nonzero_cosets(mask);
  // Z_{k+1} adds the |j| = k conditions on top of Z_k; scan degrees upward.
  // A first failure at |j| = d certifies generation degree d - 1.
  for (int d = 0; d <= cap; ++d) {
    for (const MultiIndex& j : multi_indices_of_degree(mask.dim(), d)) {
      if (auto w = epsilon_conditions_at(mask, j, cosets)) {
        if (d >= 1) out.degree = d - 1;
        out.witness = std::move(w);
        return out;
      }
    }
  }
  out.degree = cap;
  out.capped = true;
  return out;
}

ParamShift tau_formula(const Mask& mask) {
  const Rational scale = 1 / modulus_power(mask);
  ParamShift tau;
  for (int i = 0; i < mask.dim(); ++i) {
    const MultiIndex eps_i = MultiIndex::unit(mask.dim(), i);
    tau.push_back(scale * mask.symbol().partial_derivative(eps_i).eval_at_ones());
  }
  return tau;
}

std::optional<ParamShift> compute_tau(const Mask& mask) {
  if (!check_Z(mask, 1).ok) return std::nullopt;
  return tau_formula(mask);
}

CheckResult check_reproduction(const Mask& mask, const ParamShift& tau, int k) {
  if (k < 0) throw ValidationError("reproduction degree must be >= 0");
  if (static_cast<int>(tau.size()) != mask.dim())
    throw ValidationError("tau dimension mismatch");
  CheckResult res;
  const auto cosets = nonzero_cosets(mask);
  for (int d = 0; d <= k; ++d) {
    for (const MultiIndex& j : multi_indices_of_degree(mask.dim(), d)) {
      if (auto w = one_point_condition_at(mask, j, tau)) {
        res.witness = std::move(w);
        return res;
      }
      if (auto w = epsilon_conditions_at(mask, j, cosets)) {
        res.witness = std::move(w);
        return res;
      }
    }
  }
  res.ok = true;
  return res;
}

ReproductionSearch reproduction_degree(const Mask& mask, int cap) {
  if (cap < 0) throw ValidationError("degree cap must be >= 0");
  ReproductionSearch out;
  const Rational value = mask.symbol().eval_at_ones();
  if (value != modulus_power(mask)) {
    out.witness = sum_value_witness(mask, value);
    return out;
  }
  auto tau = compute_tau(mask);
  if (!tau) {
    // Z_1 failed on the epsilon side; surface that condition.
    out.witness = check_Z(mask, 1).witness;
    return out;
  }
  out.tau = tau;
  const auto cosets = nonzero_cosets(mask);
  for (int d = 0; d <= cap; ++d) {
    for (const MultiIndex& j : multi_indices_of_degree(mask.dim(), d)) {
      std::optional<ConditionWitness> w = one_point_condition_at(mask, j, *tau);
      if (!w) w = epsilon_conditions_at(mask, j, cosets);
      if (w) {
        // Conditions are cumulative: failing first at |j| = d certifies d-1.
        // d = 0 cannot fail here, its conditions are Z_1 and the tau gate.
        if (d >= 1) out.degree = d - 1;
        out.witness = std::move(w);
        return out;
      }
    }
  }
  out.degree = cap;
  out.capped = true;
  return out;
}

MomentCheckResult moment_condition_check(const Mask& mask, const ParamShift& tau, int k,
                                         int window) {
  if (window < 1) throw ValidationError("moment window must be >= 1");
  if (static_cast<int>(tau.size()) != mask.dim())
    throw ValidationError("tau dimension mismatch");
  MomentCheckResult res;
  res.ok = true;
  const int s = mask.dim();
  const int m = mask.dilation();
  const auto js = multi_indices_up_to_degree(s, k);

  // Walk alpha over [-window, window]^s.
  std::vector<int> alpha(s, -window);
  Rational worst_gap(0);
  for (;;) {
    const MultiIndex alpha_idx{std::vector<int>(alpha)};
    for (const MultiIndex& j : js) {
      // lhs = sum over mask terms gamma = alpha - m beta with beta integral.
      Rational lhs(0);
      for (const auto& [gamma, c] : mask.symbol().terms()) {
        bool integral = true;
        Rational beta_pow(1);
        for (int i = 0; i < s && integral; ++i) {
          const int diff = alpha[i] - gamma[i];
          if (diff % m != 0) { integral = false; break; }
          const long beta_i = diff / m;
          beta_pow *= pow_rational(Rational(beta_i), j[i]);
        }
        if (integral) lhs += c * beta_pow;
      }
      Rational rhs(1);
      for (int i = 0; i < s; ++i)
        rhs *= pow_rational((Rational(alpha[i]) - tau[i]) / m, j[i]);
      if (lhs != rhs) {
        res.ok = false;
        const Rational gap = abs(lhs - rhs);
        if (!res.max_violation || gap > worst_gap) {
          worst_gap = gap;
          res.max_violation = MomentViolation{alpha_idx, j, lhs, rhs};
        }
      }
    }
    int i = s - 1;
    while (i >= 0 && alpha[i] == window) alpha[i--] = -window;
    if (i < 0) break;
    ++alpha[i];
  }
  return res;
}

int default_moment_window(const Mask& mask) {
  return mask.support_diameter() + 2 * mask.modulus();
}

AnalysisReport analyze(const Mask& mask, int cap) {
  AnalysisReport report;
  report.dimension = mask.dim();
  report.dilation = mask.dilation();
  report.term_count = mask.symbol().term_count();
  report.cap = cap;
  report.sum_rules_order_1 = check_Z(mask, 1).ok;
  report.interpolatory = mask.is_interpolatory();

  DegreeSearch gen = generation_degree(mask, cap);
  report.generation_degree = gen.degree;
  report.generation_witness = gen.witness;
  report.generation_capped = gen.capped;

  ReproductionSearch rep = reproduction_degree(mask, cap);
  report.tau = rep.tau;
  report.reproduction_degree = rep.degree;
  report.failure_witness = rep.witness;
  report.reproduction_capped = rep.capped;

  report.note =
      "degrees are exact algebraic certificates on the symbol; reproduction at the "
      "limit additionally assumes the scheme is non-singular (convergent schemes "
      "still reproduce at least as claimed).";
  return report;
}

}  // namespace polyrep
