#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monodromy {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_one(const Rational& x) { return x == 1; }

// 1/x; the two-argument constructor requires a positive denominator.
inline Rational rat_inv(const Rational& x) {
  if (x.is_zero()) throw domain_error("rat_inv: 1/0");
  if (numerator(x) < 0) return Rational(Int(-denominator(x)), Int(-numerator(x)));
  return Rational(denominator(x), numerator(x));
}

inline std::optional<Rational> try_invert(const Rational& x) {
  if (x.is_zero()) return std::nullopt;
  return rat_inv(x);
}

inline int sign(const Rational& x) { return x.sign(); }

inline Rational rat_pow(Rational x, long e) {
  if (e < 0) {
    x = rat_inv(x);
    e = -e;
  }
  Rational r(1);
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

inline Rational rat_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline long double to_ld(const Rational& x) { return x.template convert_to<long double>(); }
inline double to_d(const Rational& x) { return x.template convert_to<double>(); }
template <class Real>
inline Real to_real(const Rational& x) {
  return x.template convert_to<Real>();
}

// Floor of a rational as an exact integer.
inline Int rat_floor(const Rational& x) {
  Int q = numerator(x) / denominator(x);
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

// sqrt of a non-negative rational if it is a perfect square.
inline std::optional<Rational> rat_sqrt_exact(const Rational& x) {
  if (x < 0) return std::nullopt;
  Int n = boost::multiprecision::sqrt(numerator(x));
  Int d = boost::multiprecision::sqrt(denominator(x));
  if (n * n != numerator(x) || d * d != denominator(x)) return std::nullopt;
  return Rational(n, d);
}

// "p" or "p/q"; q normalized positive by cpp_rational.
inline std::string rat_str(const Rational& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) s += "/" + denominator(x).str();
  return s;
}

inline Rational parse_rational(std::string_view sv) {
  auto bad = [&] { throw domain_error("parse_rational: '" + std::string(sv) + "'"); };
  size_t slash = sv.find('/');
  auto parse_int = [&](std::string_view t) -> Int {
    if (t.empty()) bad();
    size_t k = 0;
    if (t[0] == '+' || t[0] == '-') k = 1;
    if (k == t.size()) bad();
    for (size_t i = k; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) bad();
    return Int(std::string(t));
  };
  if (slash == std::string_view::npos) return Rational(parse_int(sv));
  Int n = parse_int(sv.substr(0, slash));
  Int d = parse_int(sv.substr(slash + 1));
  if (d == 0) bad();
  return Rational(n, d);
}

}  // namespace monodromy
