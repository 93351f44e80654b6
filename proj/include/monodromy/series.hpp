#pragma once

#include <limits>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "monodromy/rational.hpp"

namespace monodromy {

struct truncation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct variable_mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncation order sentinel for exact (polynomial) series.
inline constexpr long TRUNC_EXACT = std::numeric_limits<long>::max() / 4;

inline long sat_add(long a, long b) {
  if (a >= TRUNC_EXACT || b >= TRUNC_EXACT) return TRUNC_EXACT;
  return std::min(a + b, TRUNC_EXACT);
}

inline Rational scale(const Rational& a, const Rational& r) { return a * r; }
template <class F, class = std::enable_if_t<std::is_floating_point_v<F>>>
inline F scale(const F& a, const Rational& r) {
  return a * to_real<F>(r);
}
template <class F, class = std::enable_if_t<std::is_floating_point_v<F>>>
inline bool is_zero(F x) {
  return x == F(0);
}
template <class F, class = std::enable_if_t<std::is_floating_point_v<F>>>
inline std::optional<F> try_invert(F x) {
  if (x == F(0)) return std::nullopt;
  return F(1) / x;
}

// Truncated Laurent series sum_{e=lead}^{trunc} c[e-lead] * var^e + O(var^{trunc+1}).
// Coefficients beyond trunc are unknown; asking for them is an error, never zero.
// Zero-to-truncation is represented by empty c. trunc == TRUNC_EXACT marks an
// exact polynomial (every unstored coefficient is truly zero).
template <class K>
struct LaurentSeries {
  std::string var = "x";
  long lead = 0;
  long trunc = -1;
  std::vector<K> c;

  LaurentSeries() = default;

  static LaurentSeries zero(long trunc_order, std::string v = "x") {
    LaurentSeries s;
    s.var = std::move(v);
    s.lead = 0;
    s.trunc = trunc_order;
    return s;
  }
  static LaurentSeries monomial(K k, long e, long trunc_order = TRUNC_EXACT,
                                std::string v = "x") {
    LaurentSeries s;
    s.var = std::move(v);
    s.trunc = trunc_order;
    s.lead = e;
    s.c.push_back(std::move(k));
    s.normalize();
    return s;
  }
  static LaurentSeries constant(K k, std::string v = "x") {
    return monomial(std::move(k), 0, TRUNC_EXACT, std::move(v));
  }
  static LaurentSeries from_coeffs(long lead_exp, std::vector<K> coeffs, long trunc_order,
                                   std::string v = "x") {
    LaurentSeries s;
    s.var = std::move(v);
    s.lead = lead_exp;
    s.c = std::move(coeffs);
    if (trunc_order == TRUNC_EXACT)
      s.trunc = TRUNC_EXACT;
    else
      s.trunc = trunc_order;
    if (s.trunc != TRUNC_EXACT && s.lead + static_cast<long>(s.c.size()) - 1 > s.trunc)
      throw truncation_error("from_coeffs: more coefficients than truncation order");
    s.normalize();
    return s;
  }

  void normalize() {
    size_t k = 0;
    while (k < c.size() && is_zero(c[k])) ++k;
    if (k > 0) {
      c.erase(c.begin(), c.begin() + static_cast<long>(k));
      lead += static_cast<long>(k);
    }
    while (!c.empty() && is_zero(c.back())) c.pop_back();
    if (c.empty()) lead = 0;
  }

  bool zero_to_trunc() const { return c.empty(); }
  long lead_exponent() const {
    if (c.empty()) throw domain_error("lead_exponent of zero series");
    return lead;
  }
  // First exponent that could be nonzero (for truncation propagation).
  long lead_eff() const { return c.empty() ? sat_add(trunc, 1) : lead; }
  const K& lead_coeff() const {
    if (c.empty()) throw domain_error("lead_coeff of zero series");
    return c.front();
  }
  long top_stored() const { return lead + static_cast<long>(c.size()) - 1; }

  K coeff(long e) const {
    if (trunc != TRUNC_EXACT && e > trunc)
      throw truncation_error(var + "^" + std::to_string(e) + " beyond truncation order " +
                             std::to_string(trunc));
    if (c.empty() || e < lead || e > top_stored()) return K(0);
    return c[static_cast<size_t>(e - lead)];
  }

  LaurentSeries truncated(long t) const {
    LaurentSeries r = *this;
    if (t >= r.trunc) return r;
    r.trunc = t;
    if (!r.c.empty() && r.top_stored() > t) {
      long keep = t - r.lead + 1;
      if (keep <= 0)
        r.c.clear();
      else
        r.c.resize(static_cast<size_t>(keep));
    }
    r.normalize();
    return r;
  }

  template <class K2, class F>
  LaurentSeries<K2> map(F f) const {
    LaurentSeries<K2> r;
    r.var = var;
    r.lead = lead;
    r.trunc = trunc;
    r.c.reserve(c.size());
    for (const auto& k : c) r.c.push_back(f(k));
    r.normalize();
    return r;
  }

  // Numeric evaluation sum c_e x^e with a coefficient-to-Real functor.
  template <class Real, class F>
  Real eval_with(Real x, F conv) const {
    Real acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + conv(c[i]);
    Real p(1);
    long e = lead;
    if (e >= 0)
      for (long k = 0; k < e; ++k) p *= x;
    else
      for (long k = 0; k < -e; ++k) p /= x;
    return acc * p;
  }
};

template <class K>
inline bool is_zero(const LaurentSeries<K>& s) {
  return s.zero_to_trunc();
}

namespace detail {
template <class K>
inline void check_var(const LaurentSeries<K>& a, const LaurentSeries<K>& b) {
  if (a.var != b.var)
    throw variable_mismatch("series variable mismatch: " + a.var + " vs " + b.var);
}
}  // namespace detail

template <class K>
inline LaurentSeries<K> series_add(const LaurentSeries<K>& a, const LaurentSeries<K>& b) {
  detail::check_var(a, b);
  LaurentSeries<K> r;
  r.var = a.var;
  r.trunc = std::min(a.trunc, b.trunc);
  if (a.c.empty() && b.c.empty()) return r;
  long lo = std::min(a.c.empty() ? b.lead : a.lead, b.c.empty() ? a.lead : b.lead);
  long hi = std::min(std::max(a.top_stored(), b.top_stored()), r.trunc);
  if (hi < lo) return r;
  r.lead = lo;
  r.c.assign(static_cast<size_t>(hi - lo + 1), K(0));
  auto acc = [&](const LaurentSeries<K>& s, bool negate) {
    (void)negate;
    for (size_t i = 0; i < s.c.size(); ++i) {
      long e = s.lead + static_cast<long>(i);
      if (e > hi) break;
      r.c[static_cast<size_t>(e - lo)] = r.c[static_cast<size_t>(e - lo)] + s.c[i];
    }
  };
  acc(a, false);
  acc(b, false);
  r.normalize();
  return r;
}

template <class K>
inline LaurentSeries<K> series_neg(const LaurentSeries<K>& a) {
  LaurentSeries<K> r = a;
  for (auto& k : r.c) k = -k;
  return r;
}

template <class K>
inline LaurentSeries<K> series_sub(const LaurentSeries<K>& a, const LaurentSeries<K>& b) {
  return series_add(a, series_neg(b));
}

// Cauchy product with truncation propagation.
template <class K>
inline LaurentSeries<K> series_mul(const LaurentSeries<K>& a, const LaurentSeries<K>& b) {
  detail::check_var(a, b);
  LaurentSeries<K> r;
  r.var = a.var;
  r.trunc = std::min(sat_add(a.trunc, b.lead_eff()), sat_add(b.trunc, a.lead_eff()));
  if (a.c.empty() || b.c.empty()) return r;
  long lo = a.lead + b.lead;
  long hi = std::min(a.top_stored() + b.top_stored(), r.trunc);
  if (hi < lo) return r;
  r.lead = lo;
  r.c.assign(static_cast<size_t>(hi - lo + 1), K(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (is_zero(a.c[i])) continue;
    long ea = a.lead + static_cast<long>(i);
    for (size_t j = 0; j < b.c.size(); ++j) {
      long e = ea + b.lead + static_cast<long>(j);
      if (e > hi) break;
      r.c[static_cast<size_t>(e - lo)] = r.c[static_cast<size_t>(e - lo)] + a.c[i] * b.c[j];
    }
  }
  r.normalize();
  return r;
}

template <class K>
inline LaurentSeries<K> series_scale(const LaurentSeries<K>& a, const K& k) {
  LaurentSeries<K> r = a;
  for (auto& x : r.c) x = x * k;
  r.normalize();
  return r;
}

template <class K>
inline LaurentSeries<K> series_shift(const LaurentSeries<K>& a, long e) {
  LaurentSeries<K> r = a;
  r.lead += e;
  r.trunc = sat_add(r.trunc, e);
  return r;
}

template <class K>
inline LaurentSeries<K> series_derivative(const LaurentSeries<K>& a) {
  LaurentSeries<K> r;
  r.var = a.var;
  r.trunc = a.trunc == TRUNC_EXACT ? TRUNC_EXACT : a.trunc - 1;
  if (a.c.empty()) return r;
  r.lead = a.lead - 1;
  r.c.reserve(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) {
    long e = a.lead + static_cast<long>(i);
    r.c.push_back(a.c[i] * K(e));
  }
  r.normalize();
  return r;
}

// Coefficient of var^{-1}.
template <class K>
inline K residue(const LaurentSeries<K>& a) {
  if (a.c.empty() || a.lead > -1) {
    if (a.trunc < -1) throw truncation_error("residue: series not known through var^-1");
    return K(0);
  }
  return a.coeff(-1);
}

// 1/a. The result is O-correct to a.trunc - 2*lead (exact inputs need a target order).
template <class K>
inline LaurentSeries<K> series_reciprocal(const LaurentSeries<K>& a, long order_hint = -1) {
  if (a.c.empty()) throw domain_error("series_reciprocal of zero series");
  long rel = a.trunc == TRUNC_EXACT ? order_hint : a.trunc - a.lead;
  if (rel < 0)
    throw truncation_error("series_reciprocal: exact input needs an explicit order");
  auto inv0 = try_invert(a.lead_coeff());
  if (!inv0) throw domain_error("series_reciprocal: leading coefficient not invertible");
  // a = a0 x^m (1 + h); invert 1 + h by the standard recurrence.
  std::vector<K> h(static_cast<size_t>(rel) + 1, K(0));
  h[0] = K(1);
  for (long i = 1; i <= rel; ++i) {
    long e = a.lead + i;
    K ai = (e <= a.top_stored() && e >= a.lead) ? a.c[static_cast<size_t>(i)] : K(0);
    h[static_cast<size_t>(i)] = ai * (*inv0);
  }
  std::vector<K> g(static_cast<size_t>(rel) + 1, K(0));
  g[0] = K(1);
  for (long i = 1; i <= rel; ++i) {
    K s(0);
    for (long k = 1; k <= i; ++k) s = s + h[static_cast<size_t>(k)] * g[static_cast<size_t>(i - k)];
    g[static_cast<size_t>(i)] = -s;
  }
  for (auto& x : g) x = x * (*inv0);
  LaurentSeries<K> r;
  r.var = a.var;
  r.lead = -a.lead;
  r.c = std::move(g);
  r.trunc = -a.lead + rel;
  r.normalize();
  return r;
}

namespace detail {
// (1 + h)^alpha with h of positive relative order, via the power recurrence
// d_i = (i)^{-1} sum_{k=1..i} (k(alpha+1) - i) h_k d_{i-k}  (a0 = 1).
template <class K>
inline std::vector<K> one_plus_pow(const std::vector<K>& h, const Rational& alpha, long rel) {
  std::vector<K> d(static_cast<size_t>(rel) + 1, K(0));
  d[0] = K(1);
  for (long i = 1; i <= rel; ++i) {
    K s(0);
    for (long k = 1; k <= i; ++k) {
      Rational f = Rational(k) * (alpha + 1) - i;
      s = s + scale(h[static_cast<size_t>(k)] * d[static_cast<size_t>(i - k)], f);
    }
    d[static_cast<size_t>(i)] = scale(s, Rational(1, i));
  }
  return d;
}

template <class K>
inline std::vector<K> relative_coeffs(const LaurentSeries<K>& a, long rel, const K& lead_inv) {
  std::vector<K> h(static_cast<size_t>(rel) + 1, K(0));
  for (long i = 0; i <= rel; ++i) {
    long e = a.lead + i;
    if (e <= a.top_stored()) h[static_cast<size_t>(i)] = a.c[static_cast<size_t>(i)] * lead_inv;
  }
  return h;
}
}  // namespace detail

// a^n for integer n >= 0. Uses the power recurrence when the leading
// coefficient is a unit, falling back to binary powering otherwise.
template <class K>
inline LaurentSeries<K> series_pow(const LaurentSeries<K>& a, long n) {
  if (n < 0) throw domain_error("series_pow: negative exponent");
  if (n == 0) {
    long rel = a.trunc == TRUNC_EXACT ? TRUNC_EXACT : std::max(a.trunc - a.lead_eff(), 0L);
    return LaurentSeries<K>::monomial(K(1), 0, rel, a.var);
  }
  if (a.c.empty()) {
    LaurentSeries<K> r;
    r.var = a.var;
    r.trunc = a.trunc == TRUNC_EXACT ? TRUNC_EXACT : n * (a.trunc + 1) - 1;
    return r;
  }
  long rel = a.trunc == TRUNC_EXACT ? static_cast<long>(a.c.size()) * n : a.trunc - a.lead;
  auto inv0 = try_invert(a.lead_coeff());
  if (!inv0) {
    LaurentSeries<K> r = a;
    LaurentSeries<K> acc = LaurentSeries<K>::monomial(K(1), 0, TRUNC_EXACT, a.var);
    long e = n;
    while (e > 0) {
      if (e & 1) acc = series_mul(acc, r);
      if (e > 1) r = series_mul(r, r);
      e >>= 1;
    }
    return acc;
  }
  auto h = detail::relative_coeffs(a, rel, *inv0);
  auto d = detail::one_plus_pow(h, Rational(n), rel);
  K a0n(1);
  for (long k = 0; k < n; ++k) a0n = a0n * a.lead_coeff();
  for (auto& x : d) x = x * a0n;
  LaurentSeries<K> r;
  r.var = a.var;
  r.lead = n * a.lead;
  r.c = std::move(d);
  r.trunc = a.trunc == TRUNC_EXACT ? TRUNC_EXACT : n * a.lead + rel;
  r.normalize();
  return r;
}

// a^alpha for rational alpha; requires unit leading coefficient equal to 1 and
// an exponent such that alpha * lead is an integer (the caller handles roots of
// the leading monomial separately).
template <class K>
inline LaurentSeries<K> series_pow_binomial(const LaurentSeries<K>& a, const Rational& alpha,
                                            long order_hint = -1) {
  if (a.c.empty()) throw domain_error("series_pow_binomial of zero series");
  Rational le = alpha * a.lead;
  if (!is_integer(le))
    throw domain_error("series_pow_binomial: fractional leading exponent; split first");
  long rel = a.trunc == TRUNC_EXACT ? order_hint : a.trunc - a.lead;
  if (rel < 0) throw truncation_error("series_pow_binomial: exact input needs explicit order");
  auto inv0 = try_invert(a.lead_coeff());
  if (!inv0) throw domain_error("series_pow_binomial: leading coefficient not invertible");
  if (!is_zero(a.lead_coeff() - K(1)))
    throw domain_error("series_pow_binomial: leading coefficient must be 1");
  auto h = detail::relative_coeffs(a, rel, *inv0);
  auto d = detail::one_plus_pow(h, alpha, rel);
  LaurentSeries<K> r;
  r.var = a.var;
  r.lead = static_cast<long>(numerator(le));
  r.c = std::move(d);
  r.trunc = r.lead + rel;
  r.normalize();
  return r;
}

// outer(inner); inner must have positive leading exponent (no constant term).
template <class K>
inline LaurentSeries<K> series_compose(const LaurentSeries<K>& outer,
                                       const LaurentSeries<K>& inner) {
  if (!inner.c.empty() && inner.lead < 1)
    throw domain_error("series_compose: inner series has a constant (or lower) term");
  if (inner.c.empty() && inner.trunc < 1)
    throw truncation_error("series_compose: inner unknown at order 1");
  LaurentSeries<K> r;
  r.var = inner.var;
  if (outer.c.empty()) {
    long li = inner.lead_eff();
    r.trunc = outer.trunc == TRUNC_EXACT ? TRUNC_EXACT
                                         : sat_add(outer.trunc, 1) * li - 1;
    return r;
  }
  long lo = outer.lead, to = outer.top_stored();
  long li = inner.lead_eff();
  // Horner over the polynomial part, then the inner^lo factor.
  LaurentSeries<K> acc = LaurentSeries<K>::constant(outer.c.back(), inner.var);
  for (long e = to - 1; e >= lo; --e) {
    acc = series_mul(acc, inner);
    acc = series_add(acc, LaurentSeries<K>::constant(outer.coeff(e), inner.var));
  }
  if (lo > 0) {
    acc = series_mul(acc, series_pow(inner, lo));
  } else if (lo < 0) {
    if (inner.c.empty()) throw domain_error("series_compose: Laurent outer needs invertible inner");
    acc = series_mul(acc, series_reciprocal(series_pow(inner, -lo)));
  }
  // Sound overall bound: error from outer truncation enters at (to+1)*li, from
  // inner truncation at inner.trunc + 1 + (lo-1)*li.
  long bound = TRUNC_EXACT;
  if (outer.trunc != TRUNC_EXACT) bound = std::min(bound, sat_add(outer.trunc, 1) * li - 1);
  if (inner.trunc != TRUNC_EXACT)
    bound = std::min(bound, sat_add(inner.trunc, 1) + (lo - 1) * li - 1);
  r = acc.truncated(std::min(acc.trunc, bound));
  return r;
}

// True iff a and b agree on every coefficient both know.
template <class K>
inline bool series_equal(const LaurentSeries<K>& a, const LaurentSeries<K>& b) {
  long t = std::min(a.trunc, b.trunc);
  long hi = std::min(t, std::max(a.top_stored(), b.top_stored()));
  long lo = std::min(a.lead_eff(), b.lead_eff());
  for (long e = lo; e <= hi; ++e)
    if (!is_zero(a.coeff(e) - b.coeff(e))) return false;
  return true;
}

// Puiseux series: value(rho) = base(sigma) with rho = sigma^index.
template <class K>
struct PuiseuxSeries {
  LaurentSeries<K> base;
  long index = 1;
};

// Change sigma^n = rho turning a Puiseux inverse integrating factor of
// multiplicity m, index n into a Laurent one of multiplicity m - n + 1:
// the transformed factor is base(sigma) / (n sigma^{n-1}).
template <class K>
inline LaurentSeries<K> puiseux_to_laurent(const PuiseuxSeries<K>& v) {
  if (v.index < 1) throw domain_error("puiseux_to_laurent: index must be >= 1");
  if (v.index == 1) return v.base;
  LaurentSeries<K> r = series_shift(v.base, -(v.index - 1));
  auto maybe = try_invert(K(v.index));
  if (!maybe) throw domain_error("puiseux_to_laurent: index not invertible in domain");
  return series_scale(r, *maybe);
}

template <class K>
inline std::string series_str(const LaurentSeries<K>& s, std::string (*fmt)(const K&)) {
  std::string out;
  for (size_t i = 0; i < s.c.size(); ++i) {
    if (is_zero(s.c[i])) continue;
    if (!out.empty()) out += " + ";
    long e = s.lead + static_cast<long>(i);
    out += "(" + fmt(s.c[i]) + ")";
    if (e != 0) out += "*" + s.var + "^" + std::to_string(e);
  }
  if (out.empty()) out = "0";
  if (s.trunc != TRUNC_EXACT) out += " + O(" + s.var + "^" + std::to_string(s.trunc + 1) + ")";
  return out;
}

}  // namespace monodromy
