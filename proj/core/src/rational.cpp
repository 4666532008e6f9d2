#include "polyrep/rational.hpp"

#include <sstream>

namespace polyrep {

Rational make_rational(long num, long den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  const std::string num_part = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  auto is_integer_literal = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_integer_literal(num_part) || !is_integer_literal(den_part))
    throw ParseError("malformed rational literal '" + text + "'");
  auto strip_plus = [](const std::string& s) { return s[0] == '+' ? s.substr(1) : s; };
  BigInt num(strip_plus(num_part), 10);
  BigInt den(strip_plus(den_part), 10);
  if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& value) {
  return value.get_str();  // "p" or "p/q", canonical
}

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0) {
    if (exp < 0) throw ValidationError("zero base with negative exponent");
    return Rational(0);
  }
  const bool invert = exp < 0;
  unsigned long e = invert ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
  out.canonicalize();
  if (invert) out = 1 / out;
  return out;
}

std::string rational_vector_to_string(const std::vector<Rational>& values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << rational_to_string(values[i]);
  }
  out << ')';
  return out.str();
}

}  // namespace polyrep
