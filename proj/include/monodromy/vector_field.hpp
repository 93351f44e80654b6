#pragma once

#include <cmath>
#include <map>
#include <vector>

#include "monodromy/bivariate.hpp"

namespace monodromy {

// One factor f^lambda of a generalized Darboux inverse integrating factor.
struct DarbouxFactor {
  BivariatePolynomial poly;
  Rational exponent;
};

// Planar polynomial vector field P d/dx + Q d/dy with an inverse integrating
// factor given as a product of Darboux factors v = prod f_i^{lambda_i}.
struct VectorFieldSpec {
  BivariatePolynomial P, Q;
  std::vector<DarbouxFactor> iif_factors;

  bool singular_at_origin() const {
    return P.coeff(0, 0).is_zero() && Q.coeff(0, 0).is_zero();
  }
};

// Support point data in the shifted convention
// P = sum a_ij x^i y^{j-1},  Q = sum b_ij x^{i-1} y^j.
struct SupportEntry {
  Rational a, b;
};

inline std::map<std::pair<long, long>, SupportEntry> support_of(const VectorFieldSpec& X) {
  std::map<std::pair<long, long>, SupportEntry> s;
  for (const auto& [ij, k] : X.P.terms) s[{ij.first, ij.second + 1}].a = k;
  for (const auto& [ij, k] : X.Q.terms) s[{ij.first + 1, ij.second}].b = k;
  return s;
}

// Numeric value of v = prod f_i^{lambda_i}; returns NaN when a factor is
// negative under a fractional exponent.
template <class Real>
inline Real darboux_eval(const VectorFieldSpec& X, Real x, Real y) {
  Real v(1);
  for (const auto& f : X.iif_factors) {
    Real base = f.poly.eval(x, y);
    if (is_integer(f.exponent)) {
      long e = static_cast<long>(numerator(f.exponent));
      Real p(1);
      bool invert = e < 0;
      for (long k = 0; k < (invert ? -e : e); ++k) p *= base;
      v *= invert ? Real(1) / p : p;
    } else {
      if (base < Real(0)) return std::numeric_limits<Real>::quiet_NaN();
      v *= pow(base, to_real<Real>(f.exponent));
    }
  }
  return v;
}

}  // namespace monodromy
