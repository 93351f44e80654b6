#pragma once

// Shared vector-field fixtures for the test suites.

#include "monodromy/vector_field.hpp"

namespace monodromy::fixtures {

inline BivariatePolynomial X() { return BivariatePolynomial::monomial(Rational(1), 1, 0); }
inline BivariatePolynomial Y() { return BivariatePolynomial::monomial(Rational(1), 0, 1); }
inline BivariatePolynomial C(const Rational& k) {
  return BivariatePolynomial::monomial(k, 0, 0);
}

// dx/dt = (x - y)(x^2 + y^2) - lambda (x + y)
// dy/dt = (x + y)(x^2 + y^2) + lambda (x - y)
// v = (x^2 + y^2)(x^2 + y^2 - lambda)
inline VectorFieldSpec focus_family(const Rational& lambda) {
  auto x = X(), y = Y();
  auto r2 = x * x + y * y;
  VectorFieldSpec f;
  f.P = (x - y) * r2 - (x + y) * lambda;
  f.Q = (x + y) * r2 + (x - y) * lambda;
  f.iif_factors.push_back({r2, Rational(1)});
  f.iif_factors.push_back({r2 - C(lambda), Rational(1)});
  return f;
}

// dx/dt = l1 (x^6 + 3y^2)(-y + mu x) + l2 (x^2 + y^2)(y + A x^3)
// dy/dt = l1 (x^6 + 3y^2)(x + mu y) + l2 (x^2 + y^2)(-x^5 + 3 A x^2 y)
// v = (x^2 + y^2)(x^6 + 3 y^2)
inline VectorFieldSpec two_weight_family(const Rational& l1, const Rational& l2,
                                         const Rational& mu, const Rational& A) {
  auto x = X(), y = Y();
  auto u = x * x + y * y;
  auto w = x * x * x * x * x * x + (y * y) * Rational(3);
  VectorFieldSpec f;
  f.P = w * (x * mu - y) * l1 + u * (y + x * x * x * A) * l2;
  f.Q = w * (x + y * mu) * l1 + u * (x * x * y * A * Rational(3) - x * x * x * x * x) * l2;
  f.iif_factors.push_back({u, Rational(1)});
  f.iif_factors.push_back({w, Rational(1)});
  return f;
}

// The field of the fundamental equation, x^m d/dx + y^m d/dy.
inline VectorFieldSpec fundamental_field(long m) {
  VectorFieldSpec f;
  f.P = BivariatePolynomial::monomial(Rational(1), m, 0);
  f.Q = BivariatePolynomial::monomial(Rational(1), 0, m);
  return f;
}

inline VectorFieldSpec radial_field() {
  VectorFieldSpec f;
  f.P = X();
  f.Q = Y();
  return f;
}

// Rigid-rotation-like family dx/dt = x a(u) - y b(u), dy/dt = y a(u) + x b(u)
// with u = x^2 + y^2: polar form drho/dt = rho a(rho^2), dphi/dt = b(rho^2).
// v = u * a(u) is an inverse integrating factor (given factored as a, u).
inline VectorFieldSpec rigid_family(const std::vector<Rational>& a_coeffs,
                                    const std::vector<Rational>& b_coeffs,
                                    std::vector<std::pair<std::vector<Rational>, Rational>>
                                        v_factors_in_u) {
  auto x = X(), y = Y();
  auto u = x * x + y * y;
  auto in_u = [&](const std::vector<Rational>& cs) {
    BivariatePolynomial p, up = C(Rational(1));
    for (const auto& k : cs) {
      p = p + up * k;
      up = up * u;
    }
    return p;
  };
  VectorFieldSpec f;
  auto a = in_u(a_coeffs), b = in_u(b_coeffs);
  f.P = x * a - y * b;
  f.Q = y * a + x * b;
  for (auto& [cs, e] : v_factors_in_u) f.iif_factors.push_back({in_u(cs), e});
  return f;
}

}  // namespace monodromy::fixtures
