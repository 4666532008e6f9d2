#pragma once

#include <string>
#include <vector>

namespace polyrep {

/// An s-tuple of integers. Used for monomial exponents, derivative orders,
/// coset representatives and grid indices alike.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<int> entries) : entries_(entries) {}

  static MultiIndex zeros(int dim) { return MultiIndex(std::vector<int>(dim, 0)); }
  static MultiIndex unit(int dim, int axis);

  int dim() const { return static_cast<int>(entries_.size()); }
  int operator[](int i) const { return entries_[i]; }
  int& operator[](int i) { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }

  /// Sum of entries. The total degree |j| for nonnegative indices.
  long total_degree() const;
  bool is_nonnegative() const;
  bool is_zero() const;

  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  MultiIndex operator-() const;
  MultiIndex scaled(int factor) const;

  bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
  bool operator!=(const MultiIndex& o) const { return entries_ != o.entries_; }

  /// true if entries_[i] <= o[i] for all i (the partial order used by
  /// binomial sums over l <= j).
  bool leq_componentwise(const MultiIndex& o) const;

  std::string to_string() const;  // "(a, b, c)"

private:
  std::vector<int> entries_;
};

/// Strict weak order: lower entry sum first, ties broken lexicographically.
/// This is the iteration order everywhere ordering is observable.
struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// All nonnegative s-tuples with entry sum == degree, graded-lex order.
std::vector<MultiIndex> multi_indices_of_degree(int dim, int degree);

/// All nonnegative s-tuples with entry sum <= degree, graded-lex order.
std::vector<MultiIndex> multi_indices_up_to_degree(int dim, int degree);

}  // namespace polyrep
