#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "monodromy/polynomial.hpp"
#include "monodromy/rational.hpp"
#include "monodromy/series.hpp"
#include "monodromy/sturm.hpp"

namespace monodromy {

// Trigonometric polynomial a(c) + b(c)*s reduced modulo c^2 + s^2 = 1,
// canonical form with s-degree <= 1.
struct TrigPoly {
  QPoly a, b;

  TrigPoly() = default;
  TrigPoly(QPoly a_, QPoly b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit TrigPoly(Rational k) : a(QPoly(std::move(k))) {}

  bool zero() const { return a.zero() && b.zero(); }

  friend bool operator==(const TrigPoly& x, const TrigPoly& y) = default;

  friend TrigPoly operator+(const TrigPoly& x, const TrigPoly& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend TrigPoly operator-(const TrigPoly& x) { return {-x.a, -x.b}; }
  friend TrigPoly operator-(const TrigPoly& x, const TrigPoly& y) { return x + (-y); }
  friend TrigPoly operator*(const TrigPoly& x, const TrigPoly& y) {
    static const QPoly one_minus_c2{Rational(1), Rational(0), Rational(-1)};
    return {x.a * y.a + x.b * y.b * one_minus_c2, x.a * y.b + x.b * y.a};
  }
  friend TrigPoly operator*(const TrigPoly& x, const Rational& k) {
    return {x.a * k, x.b * k};
  }

  // c^i s^j with s^2 = 1 - c^2 folded away.
  static TrigPoly monomial(const Rational& k, long i, long j) {
    static const QPoly one_minus_c2{Rational(1), Rational(0), Rational(-1)};
    QPoly p = QPoly::monomial(k, static_cast<size_t>(i));
    for (long t = 0; t < j / 2; ++t) p = p * one_minus_c2;
    if (j % 2 == 0) return {p, QPoly()};
    return {QPoly(), p};
  }

  // d/dphi with c' = -s, s' = c.
  TrigPoly derivative() const {
    static const QPoly one_minus_c2{Rational(1), Rational(0), Rational(-1)};
    QPoly cpoly{Rational(0), Rational(1)};
    return {-(b.derivative() * one_minus_c2) + cpoly * b, -a.derivative()};
  }

  long degree() const {  // total trig degree
    long d = -1;
    if (!a.zero()) d = a.degree();
    if (!b.zero()) d = std::max(d, b.degree() + 1);
    return d;
  }

  Rational eval_point(const Rational& c0, const Rational& s0) const {
    return a.template eval<Rational>(c0) + b.template eval<Rational>(c0) * s0;
  }
  template <class Real>
  Real eval_angle(Real phi) const {
    Real c0 = cos(phi), s0 = sin(phi);
    return eval_cs(c0, s0);
  }
  template <class Real>
  Real eval_cs(Real c0, Real s0) const {
    Real av = 0, bv = 0;
    for (size_t i = a.c.size(); i-- > 0;) av = av * c0 + to_real<Real>(a.c[i]);
    for (size_t i = b.c.size(); i-- > 0;) bv = bv * c0 + to_real<Real>(b.c[i]);
    return av + bv * s0;
  }
};

inline bool is_zero(const TrigPoly& x) { return x.zero(); }
inline TrigPoly mul_c(const TrigPoly& x, const QPoly& q) { return {x.a * q, x.b * q}; }
inline TrigPoly conj(const TrigPoly& x) { return {x.a, -x.b}; }
// (A + Bs)(A - Bs) = A^2 - B^2 (1 - c^2), a polynomial in c alone; zero only
// for the zero element since 1 - c^2 is not a square in Q(c).
inline QPoly trig_norm(const TrigPoly& x) {
  static const QPoly one_minus_c2{Rational(1), Rational(0), Rational(-1)};
  return x.a * x.a - x.b * x.b * one_minus_c2;
}

// Ratio of trig polynomials: denominator in Q[c], monic, and
// gcd(gcd(num.a, num.b), den) = 1. This canonical form is unique.
struct TrigRational {
  TrigPoly num;
  QPoly den = QPoly(Rational(1));

  TrigRational() = default;
  TrigRational(long v) : num(Rational(v)) {}
  TrigRational(Rational v) : num(std::move(v)) {}
  TrigRational(TrigPoly n) : num(std::move(n)) {}
  TrigRational(TrigPoly n, QPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den.zero()) throw domain_error("TrigRational: zero denominator");
    if (num.zero()) {
      den = QPoly(Rational(1));
      return;
    }
    QPoly g = poly_gcd(poly_gcd(num.a, num.b), den);
    if (g.degree() > 0) {
      num.a = poly_divmod(num.a, g).first;
      num.b = poly_divmod(num.b, g).first;
      den = poly_divmod(den, g).first;
    }
    Rational lead = den.lead();
    if (!is_one(lead)) {
      Rational inv = rat_inv(lead);
      num.a = num.a * inv;
      num.b = num.b * inv;
      den = den * inv;
    }
  }

  bool zero() const { return num.zero(); }

  friend bool operator==(const TrigRational& x, const TrigRational& y) = default;

  friend TrigRational operator+(const TrigRational& x, const TrigRational& y) {
    return TrigRational(mul_c(x.num, y.den) + mul_c(y.num, x.den), x.den * y.den);
  }
  friend TrigRational operator-(const TrigRational& x) {
    TrigRational r = x;
    r.num = -r.num;
    return r;
  }
  friend TrigRational operator-(const TrigRational& x, const TrigRational& y) {
    return x + (-y);
  }
  friend TrigRational operator*(const TrigRational& x, const TrigRational& y) {
    return TrigRational(x.num * y.num, x.den * y.den);
  }
  TrigRational& operator+=(const TrigRational& y) { return *this = *this + y; }
  TrigRational& operator-=(const TrigRational& y) { return *this = *this - y; }
  TrigRational& operator*=(const TrigRational& y) { return *this = *this * y; }

  TrigRational inverse() const {
    if (num.zero()) throw domain_error("TrigRational: division by zero");
    // D / (A + Bs) = D (A - Bs) / (A^2 - B^2(1 - c^2))
    return TrigRational(mul_c(conj(num), den), trig_norm(num));
  }
  friend TrigRational operator/(const TrigRational& x, const TrigRational& y) {
    return x * y.inverse();
  }

  TrigRational derivative() const {
    // (N/D)' = (N' D - N D') / D^2, with D' = dD/dc * (-s)
    TrigPoly dden(QPoly(), -den.derivative());
    return TrigRational(mul_c(num.derivative(), den) - num * dden, den * den);
  }

  // Exact value at a rational circle point (c0, s0), c0^2 + s0^2 = 1.
  Rational eval_point(const Rational& c0, const Rational& s0) const {
    Rational d = den.template eval<Rational>(c0);
    if (d.is_zero()) throw domain_error("TrigRational: pole at evaluation point");
    return num.eval_point(c0, s0) / d;
  }
  Rational at_zero() const { return eval_point(Rational(1), Rational(0)); }

  template <class Real>
  Real eval_angle(Real phi) const {
    return eval_cs(cos(phi), sin(phi));
  }
  template <class Real>
  Real eval_cs(Real c0, Real s0) const {
    Real dv = 0;
    for (size_t i = den.c.size(); i-- > 0;) dv = dv * c0 + to_real<Real>(den.c[i]);
    return num.eval_cs(c0, s0) / dv;
  }
};

inline bool is_zero(const TrigRational& x) { return x.zero(); }

inline std::optional<TrigRational> try_invert(const TrigRational& x) {
  if (x.zero()) return std::nullopt;
  return x.inverse();
}

inline TrigRational scale(const TrigRational& x, const Rational& r) {
  TrigRational y = x;
  y.num = y.num * r;
  y.normalize();
  return y;
}

inline std::string trig_str(const TrigRational& x) {
  auto fq = [](const QPoly& p) {
    return poly_str(p, std::string("c"), +[](const Rational& r) { return rat_str(r); });
  };
  std::string s = "(" + fq(x.num.a);
  if (!x.num.b.zero()) s += " + (" + fq(x.num.b) + ")*s";
  s += ")";
  if (x.den.degree() > 0 || !is_one(x.den.coeff(0))) s += "/(" + fq(x.den) + ")";
  return s;
}

// --- local Taylor expansion ------------------------------------------------

// cos/sin of the increment as truncated series over F (F = Rational or a
// floating type; Rational coefficients are exact).
template <class F>
inline std::pair<LaurentSeries<F>, LaurentSeries<F>> cos_sin_series(long order,
                                                                    const std::string& var) {
  std::vector<F> cc(static_cast<size_t>(order) + 1, F(0));
  std::vector<F> sc(static_cast<size_t>(order) + 1, F(0));
  Rational fact(1);
  for (long k = 0; k <= order; ++k) {
    if (k > 0) fact *= k;
    Rational term = rat_inv(fact);
    if (k % 4 >= 2) term = -term;
    if (k % 2 == 0)
      cc[static_cast<size_t>(k)] = scale(F(1), term);
    else
      sc[static_cast<size_t>(k)] = scale(F(1), term);
  }
  return {LaurentSeries<F>::from_coeffs(0, cc, order, var),
          LaurentSeries<F>::from_coeffs(0, sc, order, var)};
}

// Taylor expansion of the trig rational about the circle point (c0, s0)
// (the angle phi* with cos = c0, sin = s0), in the local variable u.
// Requires den(c0) != 0.
template <class F>
inline LaurentSeries<F> trig_taylor(const TrigRational& x, const F& c0, const F& s0, long order,
                                    const std::string& var = "u") {
  auto [cosu, sinu] = cos_sin_series<F>(order, var);
  LaurentSeries<F> c = series_sub(series_scale(cosu, c0), series_scale(sinu, s0));
  LaurentSeries<F> s = series_add(series_scale(cosu, s0), series_scale(sinu, c0));
  auto horner = [&](const QPoly& p) {
    LaurentSeries<F> acc = LaurentSeries<F>::zero(order, var);
    for (size_t i = p.c.size(); i-- > 0;) {
      acc = series_mul(acc, c);
      acc = series_add(acc, LaurentSeries<F>::monomial(scale(F(1), p.c[i]), 0, order, var));
    }
    return acc;
  };
  LaurentSeries<F> numer = series_add(horner(x.num.a), series_mul(horner(x.num.b), s));
  LaurentSeries<F> denom = horner(x.den);
  if (denom.zero_to_trunc() || denom.lead_exponent() != 0)
    throw domain_error("trig_taylor: pole at expansion point");
  return series_mul(numer, series_reciprocal(denom));
}

// --- zeros on the circle ----------------------------------------------------

// (1+t^2)^d * f(c(t), s(t)) with the half-angle substitution c = (1-t^2)/(1+t^2),
// s = 2t/(1+t^2); real roots of the result are the zeros of f away from phi = pi.
inline QPoly halftan_poly(const TrigPoly& f) {
  long d = std::max<long>(std::max(f.a.degree(), f.b.degree() + 1), 0);
  QPoly one_minus{Rational(1), Rational(0), Rational(-1)};
  QPoly one_plus{Rational(1), Rational(0), Rational(1)};
  auto pw = [](const QPoly& p, long k) {
    QPoly r(Rational(1));
    for (long i = 0; i < k; ++i) r = r * p;
    return r;
  };
  QPoly out;
  for (long k = 0; k <= f.a.degree(); ++k) {
    Rational ak = f.a.coeff(static_cast<size_t>(k));
    if (ak.is_zero()) continue;
    out = out + pw(one_minus, k) * pw(one_plus, d - k) * ak;
  }
  QPoly two_t{Rational(0), Rational(2)};
  for (long k = 0; k <= f.b.degree(); ++k) {
    Rational bk = f.b.coeff(static_cast<size_t>(k));
    if (bk.is_zero()) continue;
    out = out + pw(one_minus, k) * pw(one_plus, d - 1 - k) * two_t * bk;
  }
  return out;
}

struct CircleZero {
  long double angle = 0;   // in [0, 2*pi)
  int multiplicity = 1;
  int quadrant = -1;       // 0,1,2,3 for phi = 0, pi/2, pi, 3pi/2; else -1
  std::optional<Rational> t_exact;             // exact tan(phi/2) when rational
  std::optional<std::pair<Rational, Rational>> t_box;  // isolating interval otherwise
};

inline constexpr long double PI_L = 3.14159265358979323846264338327950288L;

// All zeros of a nonzero trig polynomial on [0, 2*pi), with multiplicities.
inline std::vector<CircleZero> trig_zeros(const TrigPoly& f) {
  if (f.zero()) throw domain_error("trig_zeros of the zero function");
  std::vector<CircleZero> out;
  // the point phi = pi corresponds to t = infinity in the half-angle chart
  TrigPoly g = f;
  int mult_pi = 0;
  while (g.eval_point(Rational(-1), Rational(0)).is_zero()) {
    ++mult_pi;
    g = g.derivative();
    if (g.zero()) throw domain_error("trig_zeros: identically zero derivative chain");
  }
  if (mult_pi > 0) {
    CircleZero z;
    z.angle = PI_L;
    z.multiplicity = mult_pi;
    z.quadrant = 2;
    out.push_back(z);
  }
  QPoly T = halftan_poly(f);
  for (const auto& r : real_roots(T)) {
    CircleZero z;
    z.multiplicity = r.multiplicity;
    if (r.exact) {
      z.t_exact = *r.exact;
      if (*r.exact == 0)
        z.quadrant = 0;
      else if (*r.exact == 1)
        z.quadrant = 1;
      else if (*r.exact == -1)
        z.quadrant = 3;
      z.angle = 2.0L * atanl(to_ld(*r.exact));
    } else {
      z.t_box = std::make_pair(r.lo, r.hi);
      z.angle = 2.0L * atanl(to_ld((r.lo + r.hi) / 2));
    }
    if (z.angle < 0) z.angle += 2 * PI_L;
    out.push_back(z);
  }
  std::sort(out.begin(), out.end(),
            [](const CircleZero& x, const CircleZero& y) { return x.angle < y.angle; });
  return out;
}

enum class TrigSign { PositiveSemi, NegativeSemi, Indefinite, IdenticallyZero };

// Exact semidefiniteness: all circle zeros have even multiplicity and the sign
// away from them is constant.
inline TrigSign trig_sign(const TrigPoly& f) {
  if (f.zero()) return TrigSign::IdenticallyZero;
  auto zs = trig_zeros(f);
  for (const auto& z : zs)
    if (z.multiplicity % 2 == 1) return TrigSign::Indefinite;
  // sample at rational circle points until one is not a zero
  static const std::pair<Rational, Rational> pts[] = {
      {Rational(1), Rational(0)},   {Rational(-1), Rational(0)}, {Rational(0), Rational(1)},
      {Rational(3, 5), Rational(4, 5)}, {Rational(-3, 5), Rational(4, 5)},
      {Rational(5, 13), Rational(-12, 13)}, {Rational(-8, 17), Rational(15, 17)}};
  for (const auto& [c0, s0] : pts) {
    Rational v = f.eval_point(c0, s0);
    if (!v.is_zero()) return v > 0 ? TrigSign::PositiveSemi : TrigSign::NegativeSemi;
  }
  // fall back to a numeric sample between consecutive zeros
  long double phi = zs.empty() ? 0.5L : zs[0].angle + 1e-3L;
  long double v = f.eval_angle(phi);
  return v > 0 ? TrigSign::PositiveSemi : TrigSign::NegativeSemi;
}

}  // namespace monodromy
