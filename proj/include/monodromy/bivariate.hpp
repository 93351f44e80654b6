#pragma once

#include <map>
#include <string>
#include <utility>

#include "monodromy/rational.hpp"

namespace monodromy {

// Exact bivariate polynomial sum terms[(i,j)] x^i y^j; no stored zeros.
struct BivariatePolynomial {
  std::map<std::pair<long, long>, Rational> terms;

  BivariatePolynomial() = default;

  static BivariatePolynomial monomial(Rational k, long i, long j) {
    BivariatePolynomial p;
    if (!k.is_zero()) p.terms[{i, j}] = std::move(k);
    return p;
  }

  void add_term(long i, long j, const Rational& k) {
    if (k.is_zero()) return;
    auto it = terms.find({i, j});
    if (it == terms.end()) {
      terms[{i, j}] = k;
    } else {
      it->second += k;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool zero() const { return terms.empty(); }
  Rational coeff(long i, long j) const {
    auto it = terms.find({i, j});
    return it == terms.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) = default;

  friend BivariatePolynomial operator+(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial r = a;
    for (const auto& [ij, k] : b.terms) r.add_term(ij.first, ij.second, k);
    return r;
  }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a) {
    BivariatePolynomial r = a;
    for (auto& [ij, k] : r.terms) k = -k;
    return r;
  }
  friend BivariatePolynomial operator-(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    return a + (-b);
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial r;
    for (const auto& [ia, ka] : a.terms)
      for (const auto& [ib, kb] : b.terms)
        r.add_term(ia.first + ib.first, ia.second + ib.second, ka * kb);
    return r;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const Rational& k) {
    BivariatePolynomial r;
    for (const auto& [ij, ka] : a.terms) r.add_term(ij.first, ij.second, ka * k);
    return r;
  }

  BivariatePolynomial partial_x() const {
    BivariatePolynomial r;
    for (const auto& [ij, k] : terms)
      if (ij.first > 0) r.add_term(ij.first - 1, ij.second, k * Rational(ij.first));
    return r;
  }
  BivariatePolynomial partial_y() const {
    BivariatePolynomial r;
    for (const auto& [ij, k] : terms)
      if (ij.second > 0) r.add_term(ij.first, ij.second - 1, k * Rational(ij.second));
    return r;
  }

  Rational eval_exact(const Rational& x, const Rational& y) const {
    Rational s(0);
    for (const auto& [ij, k] : terms) s += k * rat_pow(x, ij.first) * rat_pow(y, ij.second);
    return s;
  }
  template <class Real>
  Real eval(Real x, Real y) const {
    Real s(0);
    for (const auto& [ij, k] : terms) {
      Real t = to_real<Real>(k);
      for (long a = 0; a < ij.first; ++a) t *= x;
      for (long b = 0; b < ij.second; ++b) t *= y;
      s += t;
    }
    return s;
  }

  std::string str(const std::string& xv = "x", const std::string& yv = "y") const {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [ij, k] : terms) {
      if (!s.empty()) s += " + ";
      s += rat_str(k);
      if (ij.first) s += "*" + xv + (ij.first > 1 ? "^" + std::to_string(ij.first) : "");
      if (ij.second) s += "*" + yv + (ij.second > 1 ? "^" + std::to_string(ij.second) : "");
    }
    return s;
  }
};

inline bool is_zero(const BivariatePolynomial& p) { return p.zero(); }

}  // namespace monodromy
