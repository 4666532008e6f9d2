#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyrep/laurent.hpp"
#include "polyrep/multi_index.hpp"

namespace polyrep {

/// A subdivision scheme definition: finitely supported mask with dilation mI.
/// The mask and its symbol are the same data. Validated on construction:
/// dimension >= 1, |dilation| >= 2.
class Mask {
public:
  Mask(int dilation, LaurentPoly symbol);

  int dim() const { return symbol_.dim(); }
  int dilation() const { return dilation_; }
  int modulus() const { return dilation_ < 0 ? -dilation_ : dilation_; }
  const LaurentPoly& symbol() const { return symbol_; }

  /// All |m|^s coset representatives {0,...,|m|-1}^s in graded-lex order,
  /// beginning with 0.
  std::vector<MultiIndex> coset_reps() const;

  /// a_e(z) = sum over alpha == e (mod m) of a_alpha z^alpha.
  /// Throws ValidationError for an out-of-range representative.
  LaurentPoly subsymbol(const MultiIndex& e) const;

  /// a_0 = 1 and a_{m alpha} = 0 for alpha != 0.
  bool is_interpolatory() const;

  /// Same dilation, symbol multiplied by z^alpha.
  Mask shifted(const MultiIndex& alpha) const;

  int support_radius() const { return symbol_.support_radius(); }
  int support_diameter() const { return symbol_.support_diameter(); }

private:
  int dilation_;
  LaurentPoly symbol_;
};

/// Mask document I/O. JSON with fields `dimension`, `dilation`,
/// `coefficients[].index`, `coefficients[].value` ("p/q" strings).
/// Reading validates strictly; writing emits terms in graded-lex order so the
/// document is deterministic. write_mask(read_mask(doc)) is the identity on
/// canonical documents.
Mask read_mask(std::istream& in);
Mask read_mask_file(const std::string& path);
void write_mask(std::ostream& out, const Mask& mask);
std::string mask_to_json(const Mask& mask);

}  // namespace polyrep
