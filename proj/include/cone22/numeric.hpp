// Scalar backends: exact rationals for certified paths, double for the CLI.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cone22 {

// Expression templates are disabled so arithmetic results are always
// concrete values; generic code with auto and brace initialization stays
// well behaved.
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::backends::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

template <class T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

// Default absolute tolerance for the floating backend. Every operation that
// needs a zero test takes the tolerance as an explicit parameter; this is
// only the default.
inline constexpr double kDefaultTol = 1e-10;

// Default clustering tolerance for multiple-root detection on the floating
// root-finding path (relative to coefficient scale).
inline constexpr double kDefaultMultTol = 1e-7;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

template <class T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

// |x| <= tol, with tol converted exactly into the scalar type.
template <class T>
bool is_zero(const T& x, double tol = 0.0) {
  if constexpr (is_exact_v<T>) {
    if (tol == 0.0) return x == 0;
    return abs_value(x) <= T(Rational(tol));
  } else {
    return std::abs(x) <= tol;
  }
}

template <class T>
int sign_of(const T& x) {
  if (x > T(0)) return 1;
  if (x < T(0)) return -1;
  return 0;
}

// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite input");
  return Rational(x);
}

inline std::string rational_to_string(const Rational& x) {
  const auto num = boost::multiprecision::numerator(x);
  const auto den = boost::multiprecision::denominator(x);
  std::string s = num.str();
  if (den != 1) s += "/" + den.str();
  return s;
}

// Accepts "p", "p/q", or a decimal literal.
inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    using boost::multiprecision::cpp_int;
    const cpp_int num(s.substr(0, slash));
    const cpp_int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("rational_from_string: zero denominator");
    return Rational(num, den);
  }
  if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
      s.find('E') != std::string::npos) {
    size_t pos = 0;
    const double d = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("rational_from_string: trailing characters");
    return rational_from_double(d);
  }
  return Rational(boost::multiprecision::cpp_int(s));
}

}  // namespace cone22
