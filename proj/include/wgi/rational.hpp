#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wgi {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, kept in lowest terms with a positive denominator.
// Arithmetic never rounds; division by zero throws.
using Rational = boost::multiprecision::cpp_rational;

inline Integer rational_num(const Rational& r) { return numerator(r); }
inline Integer rational_den(const Rational& r) { return denominator(r); }

// Builds num/den accepting any sign on den (den == 0 is an error).
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

inline int sign_of(const Rational& r) { return r.sign(); }

// Accepts "123", "-7", "p/q" (integer p, nonzero integer q). No whitespace.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Integer {
    if (s.empty()) throw std::invalid_argument("rational: empty number");
    std::size_t start = (s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("rational: lone sign");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("rational: invalid digit in \"" + std::string(s) + "\"");
    }
    return Integer(std::string(s));
  };
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  if (text.find('/', slash + 1) != std::string_view::npos)
    throw std::invalid_argument("rational: multiple '/'");
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (rational_den(r) == 1) return rational_num(r).str();
  return rational_num(r).str() + "/" + rational_den(r).str();
}

inline Integer ceil_to_integer(const Rational& r) {
  Integer num = rational_num(r);
  Integer den = rational_den(r);  // > 0
  Integer q = num / den;          // truncates toward zero
  if (num > 0 && q * den != num) ++q;
  return q;
}

}  // namespace wgi
