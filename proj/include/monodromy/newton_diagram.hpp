#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "monodromy/polynomial.hpp"
#include "monodromy/vector_field.hpp"

namespace monodromy {

struct DiagramEdge {
  std::pair<long, long> from, to;  // from has smaller i, larger j
  int p = 0, q = 0;                // coprime weights of the edge
};

struct NewtonDiagram {
  std::vector<std::pair<long, long>> support;
  std::vector<std::pair<long, long>> vertices;  // extreme points, i increasing
  std::vector<DiagramEdge> edges;               // slopes decreasing in steepness
  std::vector<std::pair<int, int>> weights;     // W(N(X)), deduplicated
};

// Newton diagram: bounded edges of the boundary of conv(union (i,j) + R+^2)
// over the shifted support of the vector field.
inline NewtonDiagram newton_diagram(const VectorFieldSpec& X) {
  if (X.P.zero() && X.Q.zero()) throw domain_error("newton_diagram: zero vector field");
  NewtonDiagram nd;
  auto sup = support_of(X);
  for (const auto& [ij, e] : sup) nd.support.push_back(ij);

  // staircase minima: drop points dominated componentwise
  std::vector<std::pair<long, long>> pts = nd.support;
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<long, long>> stair;
  long best_j = std::numeric_limits<long>::max();
  for (const auto& p : pts) {
    if (p.second < best_j) {
      stair.push_back(p);
      best_j = p.second;
    }
  }
  // lower convex hull of the staircase (keep extreme points only)
  auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& a,
                  const std::pair<long, long>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> hull;
  for (const auto& p : stair) {
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  nd.vertices = hull;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    DiagramEdge e;
    e.from = hull[k];
    e.to = hull[k + 1];
    long dq = e.to.first - e.from.first;   // > 0
    long dp = e.from.second - e.to.second; // > 0
    if (dq <= 0 || dp <= 0)
      throw domain_error("newton_diagram: degenerate (axis-parallel) edge");
    long g = std::gcd(dp, dq);
    e.p = static_cast<int>(dp / g);
    e.q = static_cast<int>(dq / g);
    nd.edges.push_back(e);
    if (std::find(nd.weights.begin(), nd.weights.end(), std::make_pair(e.p, e.q)) ==
        nd.weights.end())
      nd.weights.emplace_back(e.p, e.q);
  }
  return nd;
}

struct QuasiHomogeneousDecomposition {
  int p = 1, q = 1;
  long r = 0;  // minimal quasihomogeneous degree present
  // degree j -> (P_{p+j}, Q_{q+j})
  std::map<long, std::pair<BivariatePolynomial, BivariatePolynomial>> components;

  std::pair<BivariatePolynomial, BivariatePolynomial> leading() const {
    auto it = components.find(r);
    if (it == components.end()) throw domain_error("quasihomog: empty decomposition");
    return it->second;
  }
};

// Split X = sum_j X_j into (p,q)-quasihomogeneous parts: a monomial x^a y^b of
// P lands in degree pa + qb - p, of Q in degree pa + qb - q.
inline QuasiHomogeneousDecomposition quasihomog_decompose(const VectorFieldSpec& X, int p,
                                                          int q) {
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw domain_error("quasihomog_decompose: weights must be coprime positive");
  QuasiHomogeneousDecomposition d;
  d.p = p;
  d.q = q;
  for (const auto& [ab, k] : X.P.terms) {
    long j = p * ab.first + q * ab.second - p;
    d.components[j].first.add_term(ab.first, ab.second, k);
  }
  for (const auto& [ab, k] : X.Q.terms) {
    long j = p * ab.first + q * ab.second - q;
    d.components[j].second.add_term(ab.first, ab.second, k);
  }
  if (d.components.empty()) throw domain_error("quasihomog_decompose: zero field");
  d.r = d.components.begin()->first;
  return d;
}

// Determining polynomial of the leading pair: substituting y = eta x^{q/p}
// into P_{p+r} dy/dx - Q_{q+r} yields Q(eta) x^{(r+q)/p}; works over the
// monomial ring with exponents in (1/p) Z and checks that every term lands on
// the single required exponent.
inline Poly<Rational> determining_polynomial(const BivariatePolynomial& Pr,
                                             const BivariatePolynomial& Qr, int p, int q) {
  if (Pr.zero() && Qr.zero())
    throw domain_error("determining_polynomial: zero leading pair");
  // exponent (in units of 1/p) -> polynomial in eta
  std::map<long, Poly<Rational>> by_exp;
  Rational qp(q, p);
  for (const auto& [ab, k] : Pr.terms) {
    long e = p * ab.first + q * ab.second + q - p;  // times 1/p
    by_exp[e] += Poly<Rational>::monomial(k * qp, static_cast<size_t>(ab.second) + 1);
  }
  for (const auto& [ab, k] : Qr.terms) {
    long e = p * ab.first + q * ab.second;  // times 1/p
    by_exp[e] += Poly<Rational>::monomial(-k, static_cast<size_t>(ab.second));
  }
  for (auto it = by_exp.begin(); it != by_exp.end();) {
    if (it->second.zero())
      it = by_exp.erase(it);
    else
      ++it;
  }
  if (by_exp.empty()) return Poly<Rational>();
  if (by_exp.size() > 1)
    throw domain_error("determining_polynomial: input pair is not quasihomogeneous of a "
                       "single degree");
  return by_exp.begin()->second;
}

struct ComplexRational {
  Rational re, im;
  bool real() const { return im.is_zero(); }
};

struct FuchsResult {
  bool degenerate = false;            // determining polynomial identically zero
  Poly<Rational> xi;                  // Xi(j) (valid for real alpha0)
  std::vector<Rational> indices;      // real rational Fuchs indices
  bool any_fractional_positive = false;  // some index in Q+ \ N
};

// Fuchs indices of the dominant balance E0[y,x] = P_{p+r} y' - Q_{q+r} at the
// branch seed alpha0 x^{q/p}: the Gateaux derivative along x^{q/p + j} equals
// Xi(j) x^beta with Xi(j) = S0 j + ((q/p)(S0 + S1) - S2).
inline FuchsResult fuchs_indices(const BivariatePolynomial& Pr, const BivariatePolynomial& Qr,
                                 int p, int q, const ComplexRational& alpha0) {
  FuchsResult res;
  Poly<Rational> det = determining_polynomial(Pr, Qr, p, q);
  if (det.zero()) {
    res.degenerate = true;
    return res;
  }
  auto cpow = [](const ComplexRational& z, long n) {
    ComplexRational r{Rational(1), Rational(0)};
    for (long k = 0; k < n; ++k) {
      ComplexRational t{r.re * z.re - r.im * z.im, r.re * z.im + r.im * z.re};
      r = t;
    }
    return r;
  };
  // alpha0 must be a root of the determining polynomial
  {
    ComplexRational v{Rational(0), Rational(0)};
    for (size_t b = 0; b < det.c.size(); ++b) {
      ComplexRational ab = cpow(alpha0, static_cast<long>(b));
      v.re += det.c[b] * ab.re;
      v.im += det.c[b] * ab.im;
    }
    if (!v.re.is_zero() || !v.im.is_zero())
      throw domain_error("fuchs_indices: alpha0 is not a root of the determining polynomial");
  }
  ComplexRational S0{Rational(0), Rational(0)}, S1 = S0, S2 = S0;
  Rational qp(q, p);
  for (const auto& [ab, k] : Pr.terms) {
    ComplexRational t = cpow(alpha0, ab.second);
    S0.re += k * t.re;
    S0.im += k * t.im;
    S1.re += k * Rational(ab.second) * t.re;
    S1.im += k * Rational(ab.second) * t.im;
  }
  for (const auto& [ab, k] : Qr.terms) {
    if (ab.second == 0) continue;
    ComplexRational t = cpow(alpha0, ab.second - 1);
    S2.re += k * Rational(ab.second) * t.re;
    S2.im += k * Rational(ab.second) * t.im;
  }
  ComplexRational cst{qp * (S0.re + S1.re) - S2.re, qp * (S0.im + S1.im) - S2.im};
  if (alpha0.real()) {
    res.xi = Poly<Rational>{cst.re, S0.re};
    res.xi.normalize();
  }
  // root of the linear Xi
  bool s0_zero = S0.re.is_zero() && S0.im.is_zero();
  bool cst_zero = cst.re.is_zero() && cst.im.is_zero();
  if (s0_zero && cst_zero) {
    res.degenerate = true;
    return res;
  }
  if (!s0_zero) {
    // j = -cst / S0; keep it when real
    Rational nrm = S0.re * S0.re + S0.im * S0.im;
    Rational jre = -(cst.re * S0.re + cst.im * S0.im) / nrm;
    Rational jim = -(cst.im * S0.re - cst.re * S0.im) / nrm;
    if (jim.is_zero()) {
      res.indices.push_back(jre);
      if (jre > 0 && !is_integer(jre)) res.any_fractional_positive = true;
    }
  }
  return res;
}

}  // namespace monodromy
