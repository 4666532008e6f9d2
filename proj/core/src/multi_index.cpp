#include "polyrep/multi_index.hpp"

#include <sstream>
#include <stdexcept>

namespace polyrep {

MultiIndex MultiIndex::unit(int dim, int axis) {
  std::vector<int> e(dim, 0);
  e.at(axis) = 1;
  return MultiIndex(std::move(e));
}

long MultiIndex::total_degree() const {
  long sum = 0;
  for (int v : entries_) sum += v;
  return sum;
}

bool MultiIndex::is_nonnegative() const {
  for (int v : entries_)
    if (v < 0) return false;
  return true;
}

bool MultiIndex::is_zero() const {
  for (int v : entries_)
    if (v != 0) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  std::vector<int> e(entries_);
  for (int i = 0; i < dim(); ++i) e[i] += o.entries_[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  if (dim() != o.dim()) throw std::invalid_argument("multi-index dimension mismatch");
  std::vector<int> e(entries_);
  for (int i = 0; i < dim(); ++i) e[i] -= o.entries_[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator-() const {
  std::vector<int> e(entries_);
  for (int& v : e) v = -v;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::scaled(int factor) const {
  std::vector<int> e(entries_);
  for (int& v : e) v *= factor;
  return MultiIndex(std::move(e));
}

bool MultiIndex::leq_componentwise(const MultiIndex& o) const {
  if (dim() != o.dim()) return false;
  for (int i = 0; i < dim(); ++i)
    if (entries_[i] > o.entries_[i]) return false;
  return true;
}

std::string MultiIndex::to_string() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < dim(); ++i) {
    if (i) out << ", ";
    out << entries_[i];
  }
  out << ')';
  return out.str();
}

bool GradedLex::operator()(const MultiIndex& a, const MultiIndex& b) const {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  const long da = a.total_degree();
  const long db = b.total_degree();
  if (da != db) return da < db;
  return a.entries() < b.entries();
}

namespace {

void emit_of_degree(int dim, int degree, std::vector<int>& prefix,
                    std::vector<MultiIndex>& out) {
  if (dim == 1) {
    prefix.push_back(degree);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int head = 0; head <= degree; ++head) {
    prefix.push_back(head);
    emit_of_degree(dim - 1, degree - head, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(int dim, int degree) {
  if (dim <= 0 || degree < 0) throw std::invalid_argument("bad enumeration arguments");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  emit_of_degree(dim, degree, prefix, out);
  return out;
}

std::vector<MultiIndex> multi_indices_up_to_degree(int dim, int degree) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= degree; ++d) {
    auto level = multi_indices_of_degree(dim, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace polyrep
