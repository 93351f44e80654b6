#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monodromy/newton_diagram.hpp"
#include "monodromy/series.hpp"
#include "monodromy/trig.hpp"
#include "monodromy/vector_field.hpp"

namespace monodromy {

// A theorem hypothesis failed for these weights (non-monodromic data, zero
// leading coefficient, ...); the pipeline reports it and stops this branch.
struct hypothesis_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The polar vector field d rho/dt = R(phi, rho), d phi/dt = Theta(phi, rho)
// produced by x = rho^p cos(phi), y = rho^q sin(phi), after dividing the
// common factor rho^r out of both components.
//  Theta = G[0] + G[1] rho + ... ,  R = F[0] rho + F[1] rho^2 + ...
// where G[k], F[k] carry quasihomogeneous degree r + k.
struct PolarExpansion {
  int p = 1, q = 1;
  long r = 0;
  long trunc = 12;  // G[0..trunc], F[0..trunc] are known
  std::vector<TrigRational> G, F;
  TrigPoly jac_trig;  // p c^2 + q s^2, the angular factor of the Jacobian
  std::vector<CircleZero> omega;  // zeros of G[0] with multiplicities
  bool time_flipped = false;
  bool zero_in_omega = false;
  bool weight_in_diagram = true;
  std::vector<std::string> warnings;

  LaurentSeries<TrigRational> theta_series() const {
    std::vector<TrigRational> c(G.begin(), G.end());
    return LaurentSeries<TrigRational>::from_coeffs(0, c, trunc, "rho");
  }
  LaurentSeries<TrigRational> radial_series() const {
    std::vector<TrigRational> c(F.begin(), F.end());
    return LaurentSeries<TrigRational>::from_coeffs(1, c, trunc + 1, "rho");
  }
};

namespace detail {
// sign of a polynomial known to have no roots on [-1, 1]
inline int sign_on_circle_interval(const QPoly& d) {
  for (const auto& root : real_roots(d)) {
    Rational v = root.exact ? *root.exact : (root.lo + root.hi) / 2;
    if (v >= -1 && v <= 1 && root.exact)
      throw domain_error("denominator vanishes on the circle");
    if (!root.exact && root.hi >= -1 && root.lo <= 1)
      throw domain_error("denominator may vanish on the circle");
  }
  return sign_at(d, Rational(0));
}
}  // namespace detail

// Semidefiniteness of a trig rational whose denominator does not vanish on
// the circle.
inline TrigSign trig_rational_sign(const TrigRational& x) {
  if (x.zero()) return TrigSign::IdenticallyZero;
  int sd = detail::sign_on_circle_interval(x.den);
  TrigSign sn = trig_sign(x.num);
  if (sd > 0) return sn;
  if (sn == TrigSign::PositiveSemi) return TrigSign::NegativeSemi;
  if (sn == TrigSign::NegativeSemi) return TrigSign::PositiveSemi;
  return sn;
}

// Weighted polar blow-up of X with weights (p, q), expanded through
// quasihomogeneous degree r + N.
inline PolarExpansion polar_blowup(const VectorFieldSpec& X, int p, int q, long N = 12) {
  if (!X.singular_at_origin())
    throw hypothesis_error("polar_blowup: origin is not a singular point");
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw domain_error("polar_blowup: weights must be coprime positive integers");

  PolarExpansion pe;
  pe.p = p;
  pe.q = q;
  pe.trunc = N;
  pe.jac_trig = TrigPoly(QPoly{Rational(q), Rational(0), Rational(p - q)}, QPoly());

  {
    auto nd = newton_diagram(X);
    pe.weight_in_diagram =
        std::find(nd.weights.begin(), nd.weights.end(), std::make_pair(p, q)) !=
        nd.weights.end();
    if (!pe.weight_in_diagram)
      pe.warnings.push_back("weights (" + std::to_string(p) + "," + std::to_string(q) +
                            ") are not in W(N(X))");
  }

  auto sup = support_of(X);
  long dmin = std::numeric_limits<long>::max();
  for (const auto& [ij, e] : sup) dmin = std::min(dmin, p * ij.first + q * ij.second);
  pe.r = dmin - p - q;

  TrigRational djac(pe.jac_trig);
  pe.G.assign(static_cast<size_t>(N) + 1, TrigRational());
  pe.F.assign(static_cast<size_t>(N) + 1, TrigRational());
  for (const auto& [ij, e] : sup) {
    long i = ij.first, j = ij.second;
    long k = p * i + q * j - dmin;
    if (k > N) continue;
    TrigPoly gnum = TrigPoly::monomial(Rational(p) * e.b - Rational(q) * e.a, i, j);
    if (!gnum.zero()) pe.G[static_cast<size_t>(k)] += TrigRational(gnum) / djac;
    TrigPoly fnum;
    if (!e.a.is_zero()) fnum = fnum + TrigPoly::monomial(e.a, i + 1, j - 1);
    if (!e.b.is_zero()) fnum = fnum + TrigPoly::monomial(e.b, i - 1, j + 1);
    if (!fnum.zero()) pe.F[static_cast<size_t>(k)] += TrigRational(fnum) / djac;
  }

  if (pe.G[0].zero())
    throw hypothesis_error(
        "polar_blowup: leading angular speed vanishes identically for these weights; "
        "the origin is not monodromic with respect to (" +
        std::to_string(p) + "," + std::to_string(q) + ")");

  TrigSign sgn = trig_rational_sign(pe.G[0]);
  if (sgn == TrigSign::Indefinite)
    throw hypothesis_error(
        "polar_blowup: leading angular coefficient changes sign; the origin is not "
        "monodromic for these weights");
  if (sgn == TrigSign::NegativeSemi) {
    for (auto& g : pe.G) g = -g;
    for (auto& f : pe.F) f = -f;
    pe.time_flipped = true;
    pe.warnings.push_back("time direction flipped to make the leading angular "
                          "coefficient nonnegative");
  }

  pe.omega = trig_zeros(pe.G[0].num);
  for (const auto& z : pe.omega)
    if (z.quadrant == 0) {
      pe.zero_in_omega = true;
      pe.warnings.push_back(
          "phi = 0 is a characteristic direction; rotate coordinates to restore the "
          "section hypothesis");
    }
  return pe;
}

// Closed-form evaluators for the blown-up field; exact in the coefficients,
// numeric in (phi, rho). N_R and N_T are the raw numerators with
//   R = N_R / (J rho^r), Theta = N_T / (J rho^r), J = rho^{p+q-1} (p c^2 + q s^2).
struct FieldEval {
  int p = 1, q = 1;
  long r = 0;
  int flip = 1;
  struct Term {
    long e;        // rho exponent
    long ci, si;   // cos/sin powers
    Rational k;
    long double kd;
  };
  std::vector<Term> r_terms, t_terms;

  template <class Real>
  static Real powi(Real x, long n) {
    Real r(1);
    bool inv = n < 0;
    for (long i = 0; i < (inv ? -n : n); ++i) r *= x;
    return inv ? Real(1) / r : r;
  }
  template <class Real>
  static Real cv(const Term& t) {
    if constexpr (std::is_floating_point_v<Real>)
      return static_cast<Real>(t.kd);
    else
      return to_real<Real>(t.k);
  }

  template <class Real>
  Real sum_terms(const std::vector<Term>& ts, Real c, Real s, Real rho, long shift,
                 long dshift = 0) const {
    Real acc(0);
    for (const auto& t : ts) {
      long e = t.e + shift;
      Real v = cv<Real>(t) * powi(c, t.ci) * powi(s, t.si) * powi(rho, e - dshift);
      if (dshift) v *= Real(e);
      acc += v;
    }
    return acc * Real(flip);
  }

  template <class Real>
  Real jac_angular(Real c, Real s) const {
    return Real(p) * c * c + Real(q) * s * s;
  }

  // divided radial and angular speeds
  template <class Real>
  Real R(Real phi, Real rho) const {
    Real c = cos(phi), s = sin(phi);
    return sum_terms(r_terms, c, s, rho, -(p + q - 1) - r) / jac_angular(c, s);
  }
  template <class Real>
  Real Theta(Real phi, Real rho) const {
    Real c = cos(phi), s = sin(phi);
    return sum_terms(t_terms, c, s, rho, -(p + q - 1) - r) / jac_angular(c, s);
  }
  template <class Real>
  Real dR_drho(Real phi, Real rho) const {
    Real c = cos(phi), s = sin(phi);
    return sum_terms(r_terms, c, s, rho, -(p + q - 1) - r, 1) / jac_angular(c, s);
  }
  template <class Real>
  Real dTheta_drho(Real phi, Real rho) const {
    Real c = cos(phi), s = sin(phi);
    return sum_terms(t_terms, c, s, rho, -(p + q - 1) - r, 1) / jac_angular(c, s);
  }
  // F = R / Theta and its rho-derivative
  template <class Real>
  Real Fslope(Real phi, Real rho) const {
    return R(phi, rho) / Theta(phi, rho);
  }
  template <class Real>
  Real dF_drho(Real phi, Real rho) const {
    Real th = Theta(phi, rho);
    return (dR_drho(phi, rho) * th - R(phi, rho) * dTheta_drho(phi, rho)) / (th * th);
  }
  // raw numerator N_R (the integrand building block F/V = N_R / v)
  template <class Real>
  Real NR(Real phi, Real rho) const {
    Real c = cos(phi), s = sin(phi);
    return sum_terms(r_terms, c, s, rho, 0);
  }
};

inline FieldEval make_field_eval(const VectorFieldSpec& X, const PolarExpansion& pe) {
  FieldEval fe;
  fe.p = pe.p;
  fe.q = pe.q;
  fe.r = pe.r;
  fe.flip = pe.time_flipped ? -1 : 1;
  for (const auto& [ij, e] : support_of(X)) {
    long i = ij.first, j = ij.second;
    long eexp = fe.p * i + fe.q * j;
    if (!e.a.is_zero())
      fe.r_terms.push_back({eexp, i + 1, j - 1, e.a, to_ld(e.a)});
    if (!e.b.is_zero())
      fe.r_terms.push_back({eexp, i - 1, j + 1, e.b, to_ld(e.b)});
    Rational tk = Rational(fe.p) * e.b - Rational(fe.q) * e.a;
    if (!tk.is_zero()) fe.t_terms.push_back({eexp - 1, i, j, tk, to_ld(tk)});
  }
  return fe;
}

// The inverse integrating factor on the cylinder,
//   V(phi, rho) = v(rho^p cos, rho^q sin) / (rho^r J Theta),
// expanded as a Puiseux series in rho (index n) with trig-rational
// coefficients. Fractional Darboux exponents leave a symbolic prefactor
// prod lead_i(phi)^{e_i}; with integer exponents the prefactor is empty.
struct PrefactorTerm {
  TrigRational lead;
  Rational exponent;
};

struct PolarIIF {
  long m = 0;      // multiplicity: leading exponent of V is m/n
  long n = 1;      // index
  long m_sigma = 0;  // multiplicity m - n + 1 of the transformed Laurent factor
  PuiseuxSeries<TrigRational> v_cyl;    // V(phi, sigma^n) series part
  LaurentSeries<TrigRational> v_tilde;  // V(phi, sigma^n)/(n sigma^{n-1})
  std::vector<PrefactorTerm> prefactor;
  // phi = 0 slice of v_tilde, normalized monic; absent when some coefficient
  // has a pole on the section (phi = 0 characteristic)
  std::optional<LaurentSeries<Rational>> v0;
  std::string v0_error;
  Rational norm_rational;      // rational part of the divided-out leading value
  long double norm_numeric = 1;  // full numeric normalization constant
  std::vector<std::string> notes;

  // numeric V(phi, rho) from the truncated series (series part * prefactor)
  template <class Real>
  Real eval(Real phi, Real rho) const {
    Real sigma = pow(rho, Real(1) / Real(n));
    Real acc(0);
    for (size_t i = v_cyl.base.c.size(); i-- > 0;)
      acc = acc * sigma + v_cyl.base.c[i].template eval_angle<Real>(phi);
    acc *= FieldEval::powi(sigma, v_cyl.base.lead);
    for (const auto& pf : prefactor) {
      Real b = pf.lead.template eval_angle<Real>(phi);
      acc *= pow(b, to_real<Real>(pf.exponent));
    }
    return acc;
  }
};

// Expand one Darboux factor f(rho^p c, rho^q s) as an exact polynomial series
// in rho with trig-polynomial coefficients.
inline LaurentSeries<TrigRational> factor_on_cylinder(const BivariatePolynomial& f, int p,
                                                      int q) {
  std::map<long, TrigRational> by_e;
  for (const auto& [ab, k] : f.terms) {
    long e = p * ab.first + q * ab.second;
    by_e[e] += TrigRational(TrigPoly::monomial(k, ab.first, ab.second));
  }
  if (by_e.empty()) throw domain_error("factor_on_cylinder: zero Darboux factor");
  long lo = by_e.begin()->first, hi = by_e.rbegin()->first;
  std::vector<TrigRational> c(static_cast<size_t>(hi - lo + 1), TrigRational());
  for (const auto& [e, t] : by_e) c[static_cast<size_t>(e - lo)] = t;
  return LaurentSeries<TrigRational>::from_coeffs(lo, c, TRUNC_EXACT, "rho");
}

inline PolarIIF polar_iif(const VectorFieldSpec& X, const PolarExpansion& pe, long N = 12) {
  using TS = LaurentSeries<TrigRational>;
  if (X.iif_factors.empty())
    throw hypothesis_error("polar_iif: no inverse integrating factor supplied");

  PolarIIF out;
  Rational mu_frac(0);  // fractional part of the leading exponent
  TS series = TS::monomial(TrigRational(1), 0, TRUNC_EXACT, "rho");

  for (const auto& fac : X.iif_factors) {
    TS g = factor_on_cylinder(fac.poly, pe.p, pe.q);
    if (g.zero_to_trunc()) throw hypothesis_error("polar_iif: Darboux factor vanishes");
    long k0 = g.lead_exponent();
    g = g.truncated(k0 + N);
    if (is_integer(fac.exponent)) {
      long e = static_cast<long>(numerator(fac.exponent));
      if (e >= 0)
        series = series_mul(series, series_pow(g, e));
      else
        series = series_mul(series, series_reciprocal(series_pow(g, -e)));
    } else {
      TrigRational lead = g.lead_coeff();
      TS unit = series_scale(series_shift(g, -k0), lead.inverse());
      series = series_mul(series, series_pow_binomial(unit, fac.exponent, N));
      out.prefactor.push_back({lead, fac.exponent});
      mu_frac += fac.exponent * Rational(k0);
      out.notes.push_back("fractional Darboux exponent " + rat_str(fac.exponent) +
                          " handled via a symbolic prefactor");
    }
  }

  // divide by rho^r J Theta = rho^{r+p+q-1} (p c^2 + q s^2) Theta
  TS theta = pe.theta_series();
  series = series_mul(series, series_reciprocal(theta));
  series = series_scale(series, TrigRational(pe.jac_trig).inverse());
  series = series_shift(series, -(pe.r + pe.p + pe.q - 1));

  if (series.zero_to_trunc())
    throw hypothesis_error("polar_iif: inverse integrating factor vanishes to truncation");

  // index and multiplicity: exponents live in mu_frac + Z
  out.n = static_cast<long>(denominator(mu_frac));
  Rational mu = mu_frac + series.lead_exponent();
  out.m = static_cast<long>(numerator(Rational(mu * out.n)));
  out.m_sigma = out.m - out.n + 1;

  // rebase onto the sigma variable (rho = sigma^n)
  TS vsig;
  vsig.var = "sigma";
  vsig.lead = out.m;
  vsig.trunc = out.n * series.trunc + static_cast<long>(numerator(Rational(mu_frac * out.n)));
  vsig.c.assign(static_cast<size_t>(series.c.size() - 1) * out.n + 1, TrigRational());
  for (size_t i = 0; i < series.c.size(); ++i)
    vsig.c[i * static_cast<size_t>(out.n)] = series.c[i];
  vsig.normalize();
  out.v_cyl = PuiseuxSeries<TrigRational>{vsig, out.n};
  out.v_tilde = puiseux_to_laurent(out.v_cyl);

  // the section hypothesis needs a finite nonzero leading value at phi = 0
  Rational lead0;
  try {
    lead0 = out.v_tilde.lead_coeff().at_zero();
  } catch (const domain_error&) {
    throw hypothesis_error(
        "polar_iif: the leading coefficient of V has a pole at phi = 0; rotate "
        "coordinates so that 0 is not a characteristic direction");
  }
  if (lead0.is_zero())
    throw hypothesis_error(
        "polar_iif: leading coefficient of V vanishes at phi = 0 (v_m(0) = 0); the "
        "structure theorem hypotheses fail for these weights");
  out.norm_rational = lead0;
  out.norm_numeric = to_ld(out.norm_rational);
  for (const auto& pf : out.prefactor) {
    long double base = to_ld(pf.lead.at_zero());
    if (base <= 0)
      throw hypothesis_error(
          "polar_iif: fractional-power Darboux factor nonpositive at phi = 0");
    out.norm_numeric *= powl(base, to_ld(pf.exponent));
  }
  try {
    auto v0 = out.v_tilde.template map<Rational>(
        [](const TrigRational& t) { return t.at_zero(); });
    v0.var = "sigma";
    out.v0 = series_scale(v0, rat_inv(lead0));
  } catch (const domain_error&) {
    out.v0_error =
        "a higher coefficient of V has a pole at phi = 0 (the section meets a "
        "characteristic direction); the phi = 0 slice is not a power series";
    out.notes.push_back(out.v0_error);
  }
  return out;
}

// Sample check that V(phi, rho) has no zero off rho = 0 (a monodromic origin
// forbids them): evaluates the exact closed form v / N_T on a radius grid.
template <class VFun>
inline bool iif_nonvanishing_on_annulus(VFun&& value_at, long double rho_max,
                                        int radii = 24, int angles = 48) {
  int sign0 = 0;
  for (int i = 1; i <= radii; ++i) {
    long double rho = rho_max * i / radii;
    for (int a = 0; a < angles; ++a) {
      long double phi = 2 * PI_L * a / angles;
      long double v = value_at(phi, rho);
      if (!std::isfinite(v)) continue;  // pole of a coefficient, not a zero
      if (v == 0) return false;
      int s = v > 0 ? 1 : -1;
      if (sign0 == 0) sign0 = s;
      if (s != sign0) return false;
    }
  }
  return true;
}

}  // namespace monodromy
