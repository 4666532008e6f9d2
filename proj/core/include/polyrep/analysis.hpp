#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyrep/mask.hpp"
#include "polyrep/multi_index.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

/// Parametrization shift tau, one rational per axis (grid units).
using ParamShift = std::vector<Rational>;

/// q_j(x) = prod_i prod_{l=0..j_i-1} (x_i - l), q_0 = 1.
Rational q_eval(const MultiIndex& j, const std::vector<Rational>& x);

enum class ConditionKind {
  SumValue,            // a(1) != |m|^s
  EpsilonDerivative,   // D^j a(eps_e) != 0
  OnePointDerivative,  // D^j a(1) != |m|^s q_j(tau)
};

/// The first violated condition of a check, with both sides rendered exactly.
struct ConditionWitness {
  ConditionKind kind;
  MultiIndex j;
  std::optional<MultiIndex> coset;  // set for EpsilonDerivative
  std::string lhs;
  std::string rhs;
  std::string describe() const;
};

struct CheckResult {
  bool ok = false;
  std::optional<ConditionWitness> witness;
  explicit operator bool() const { return ok; }
};

/// Condition Z_k: a(1) = |m|^s and D^j a(eps) = 0 for every nonzero coset and
/// |j| < k. Witness = first failure in (graded-lex j, coset order) iteration.
CheckResult check_Z(const Mask& mask, int k);

/// Submask form of Z_k: a(1) = |m|^s and D^j a_e(1) = |m|^-s D^j a(1) for all
/// cosets e and |j| < k. Agrees with check_Z on every mask.
CheckResult submask_derivative_consistency(const Mask& mask, int k);

struct DegreeSearch {
  std::optional<int> degree;                 // absent: not even the base case
  std::optional<ConditionWitness> witness;   // present iff stopped before cap
  bool capped = false;
};

/// Largest k <= cap with check_Z(mask, k+1); absent if Z_1 fails.
DegreeSearch generation_degree(const Mask& mask, int cap);

/// tau = |m|^-s (D^{eps_1} a(1), ..., D^{eps_s} a(1)), without the Z_1 gate.
ParamShift tau_formula(const Mask& mask);

/// tau as above, absent when Z_1 fails (the formula is then meaningless as a
/// parametrization certificate).
std::optional<ParamShift> compute_tau(const Mask& mask);

/// Reproduction conditions up to degree k: D^j a(1) = |m|^s q_j(tau) and
/// D^j a(eps) = 0 for all nonzero cosets, |j| <= k.
CheckResult check_reproduction(const Mask& mask, const ParamShift& tau, int k);

struct ReproductionSearch {
  std::optional<ParamShift> tau;
  std::optional<int> degree;                // absent iff tau absent
  std::optional<ConditionWitness> witness;  // present iff stopped before cap
  bool capped = false;
};

/// tau from compute_tau, then the largest k <= cap passing check_reproduction.
ReproductionSearch reproduction_degree(const Mask& mask, int cap);

struct MomentViolation {
  MultiIndex alpha;
  MultiIndex j;
  Rational lhs;
  Rational rhs;
};

struct MomentCheckResult {
  bool ok = false;
  /// Violation with the largest |lhs - rhs| over the window, when any.
  std::optional<MomentViolation> max_violation;
  explicit operator bool() const { return ok; }
};

/// Windowed moment conditions: sum_beta a_{alpha - m beta} beta^j equals
/// ((alpha - tau)/m)^j for all alpha in [-window, window]^s and |j| <= k.
/// Independent cross-validation route for check_reproduction.
MomentCheckResult moment_condition_check(const Mask& mask, const ParamShift& tau,
                                         int k, int window);

/// support diameter + 2|m|: wide enough to exercise every coset with a full
/// stencil.
int default_moment_window(const Mask& mask);

extern const int kDefaultDegreeCap;  // 10

struct AnalysisReport {
  int dimension = 0;
  int dilation = 0;
  int term_count = 0;
  bool sum_rules_order_1 = false;
  bool interpolatory = false;
  std::optional<int> generation_degree;
  std::optional<ConditionWitness> generation_witness;
  std::optional<ParamShift> tau;
  std::optional<int> reproduction_degree;
  /// First failing condition of the reproduction degree search; absent when
  /// the search ran into the cap (or when tau itself is absent and the Z_1
  /// failure is reported instead).
  std::optional<ConditionWitness> failure_witness;
  int cap = 0;
  bool generation_capped = false;
  bool reproduction_capped = false;
  std::string note;
};

AnalysisReport analyze(const Mask& mask, int cap = 10);

/// Deterministic plain-text rendering (byte stable between runs).
std::string render_report_text(const AnalysisReport& report);
/// Machine-readable rendering, fields mirroring AnalysisReport.
std::string render_report_json(const AnalysisReport& report);

}  // namespace polyrep
