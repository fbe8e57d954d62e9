#pragma once

// Exact scalars. Every coordinate and coefficient in the library is an
// arbitrary-precision integer or a rational kept in lowest terms.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace phull {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a caller breaks a documented precondition.
class contract_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline int sign(const Integer& v) { return sgn(v); }
inline int sign(const Rational& v) { return sgn(v); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw contract_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Decimal rendering: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

inline std::string to_string(const Integer& v) { return v.get_str(); }

namespace detail {

inline bool parse_integer(std::string_view text, bool allow_sign, Integer& out) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) return false;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') return false;
  }
  out = Integer(std::string(text.substr(i)), 10);
  if (negative) out = -out;
  return true;
}

}  // namespace detail

/// Accepts an optionally signed integer, or integer "/" positive integer.
inline std::optional<Rational> parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  Integer num;
  if (slash == std::string_view::npos) {
    if (!detail::parse_integer(text, true, num)) return std::nullopt;
    return Rational(num);
  }
  Integer den;
  if (!detail::parse_integer(text.substr(0, slash), true, num)) return std::nullopt;
  if (!detail::parse_integer(text.substr(slash + 1), false, den)) return std::nullopt;
  if (den == 0) return std::nullopt;
  return make_rational(num, den);
}

}  // namespace phull
