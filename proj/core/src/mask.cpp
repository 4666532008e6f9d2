#include "polyrep/mask.hpp"

#include <algorithm>

#include "polyrep/rational.hpp"

namespace polyrep {

Mask::Mask(int dilation, LaurentPoly symbol)
    : dilation_(dilation), symbol_(std::move(symbol)) {
  const int n = dilation < 0 ? -dilation : dilation;
  if (n < 2) throw ValidationError("dilation must satisfy |m| >= 2");
}

std::vector<MultiIndex> Mask::coset_reps() const {
  const int n = modulus();
  const int s = dim();
  std::vector<MultiIndex> reps;
  reps.reserve(1);
  // Graded-lex enumeration of {0,...,n-1}^s, beginning with 0.
  std::vector<MultiIndex> all;
  std::vector<int> cur(s, 0);
  for (;;) {
    all.emplace_back(cur);
    int i = s - 1;
    while (i >= 0 && cur[i] == n - 1) cur[i--] = 0;
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(all.begin(), all.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return GradedLex{}(a, b);
  });
  return all;
}

LaurentPoly Mask::subsymbol(const MultiIndex& e) const {
  const int n = modulus();
  if (e.dim() != dim()) throw ValidationError("coset representative dimension mismatch");
  for (int i = 0; i < e.dim(); ++i)
    if (e[i] < 0 || e[i] >= n) throw ValidationError("coset representative out of range");
  LaurentPoly out(dim());
  for (const auto& [exp, c] : symbol_.terms()) {
    bool in_coset = true;
    for (int i = 0; i < dim() && in_coset; ++i) {
      int r = (exp[i] - e[i]) % n;
      if (r != 0) in_coset = false;
    }
    if (in_coset) out.add_term(exp, c);
  }
  return out;
}

bool Mask::is_interpolatory() const {
  const int n = modulus();
  if (symbol_.coefficient(MultiIndex::zeros(dim())) != 1) return false;
  for (const auto& [exp, c] : symbol_.terms()) {
    if (exp.is_zero()) continue;
    bool on_lattice = true;
    for (int i = 0; i < dim(); ++i)
      if (exp[i] % n != 0) { on_lattice = false; break; }
    if (on_lattice) return false;  // stored coefficients are nonzero
  }
  return true;
}

Mask Mask::shifted(const MultiIndex& alpha) const {
  return Mask(dilation_, symbol_.monomial_shift(alpha));
}

}  // namespace polyrep
