#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "monodromy/polynomial.hpp"
#include "monodromy/rational.hpp"

namespace monodromy {

// Laurent polynomial k_off*x^off + ... in one symbol over Rational.
// Serves as the coefficient domain Q[g] for the Poincare map solve (m > 1,
// symbol g = eta_m) and Q[E, 1/E] for m = 1 (symbol E = eta_1, a unit).
// Invariant: p has nonzero constant term unless p is zero; zero has off = 0.
struct LaurentPoly {
  long off = 0;
  Poly<Rational> p;

  LaurentPoly() = default;
  LaurentPoly(long v) : p(Rational(v)) {}
  LaurentPoly(const Rational& v) : p(v) {}
  static LaurentPoly symbol(long power = 1) {
    LaurentPoly r;
    r.off = power;
    r.p = Poly<Rational>(Rational(1));
    return r;
  }

  void normalize() {
    if (p.zero()) {
      off = 0;
      return;
    }
    size_t k = 0;
    while (k < p.c.size() && monodromy::is_zero(p.c[k])) ++k;
    if (k > 0) {
      p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(k));
      off += static_cast<long>(k);
    }
  }

  bool zero() const { return p.zero(); }
  long min_exp() const { return off; }
  long max_exp() const { return off + p.degree(); }
  Rational coeff(long e) const {
    if (p.zero() || e < off || e > max_exp()) return Rational(0);
    return p.c[static_cast<size_t>(e - off)];
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.zero() || b.zero()) return a.zero() && b.zero();
    return a.off == b.off && a.p == b.p;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    LaurentPoly r;
    r.off = std::min(a.off, b.off);
    r.p = a.p.shift_up(static_cast<size_t>(a.off - r.off)) +
          b.p.shift_up(static_cast<size_t>(b.off - r.off));
    r.normalize();
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    r.p = -r.p;
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.zero() || b.zero()) return r;
    r.off = a.off + b.off;
    r.p = a.p * b.p;
    return r;
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
  LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

  // Numeric substitution of the symbol.
  template <class Real>
  Real eval(Real x) const {
    Real acc(0);
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + Real(to_ld(p.c[i]));
    return acc * std::pow(x, static_cast<Real>(off));
  }

  // Exact substitution of a rational value (nonzero if off < 0).
  Rational eval_exact(const Rational& x) const {
    Rational acc = p.template eval<Rational>(x);
    return acc * rat_pow(x, off);
  }
};

inline bool is_zero(const LaurentPoly& x) { return x.zero(); }

inline LaurentPoly scale(const LaurentPoly& a, const Rational& r) {
  LaurentPoly b = a;
  b.p = b.p * r;
  b.normalize();
  return b;
}

inline std::optional<LaurentPoly> try_invert(const LaurentPoly& x) {
  if (x.zero() || x.p.degree() != 0) return std::nullopt;
  LaurentPoly r;
  r.off = -x.off;
  r.p = Poly<Rational>(rat_inv(x.p.c[0]));
  return r;
}

inline std::string laurent_poly_str(const LaurentPoly& x, const std::string& sym) {
  if (x.zero()) return "0";
  std::string s;
  for (long e = x.max_exp(); e >= x.min_exp(); --e) {
    Rational c = x.coeff(e);
    if (monodromy::is_zero(c)) continue;
    if (!s.empty()) s += " + ";
    if (e == 0 || !(c == 1)) s += rat_str(c);
    if (e != 0 && !(c == 1)) s += "*";
    if (e != 0) s += sym;
    if (e != 0 && e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace monodromy
