#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "monodromy/rational.hpp"

namespace monodromy {

// Dense univariate polynomial over a coefficient domain K.
// Invariant: no trailing zero coefficients; zero polynomial has empty c.
template <class K>
struct Poly {
  std::vector<K> c;

  Poly() = default;
  explicit Poly(K k) {
    if (!is_zero(k)) c.push_back(std::move(k));
  }
  Poly(std::initializer_list<K> init) : c(init) { normalize(); }
  static Poly monomial(K k, size_t deg) {
    Poly p;
    if (is_zero(k)) return p;
    p.c.assign(deg + 1, K(0));
    p.c[deg] = std::move(k);
    return p;
  }

  void normalize() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  bool zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for zero
  const K& lead() const {
    if (c.empty()) throw domain_error("Poly::lead of zero polynomial");
    return c.back();
  }
  K coeff(size_t i) const { return i < c.size() ? c[i] : K(0); }

  friend bool operator==(const Poly& a, const Poly& b) = default;

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& k : r.c) k = -k;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.zero() || b.zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    r.normalize();
    return r;
  }
  friend Poly operator*(const Poly& a, const K& k) {
    Poly r = a;
    for (auto& x : r.c) x = x * k;
    r.normalize();
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly derivative() const {
    Poly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K(static_cast<long>(i));
    r.normalize();
    return r;
  }

  // Horner evaluation; T needs T*T and T+K (via conversion K -> T).
  template <class T>
  T eval(const T& x) const {
    T acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + T(c[i]);
    return acc;
  }

  Poly shift_up(size_t k) const {  // multiply by x^k
    Poly r;
    if (zero()) return r;
    r.c.assign(c.size() + k, K(0));
    std::copy(c.begin(), c.end(), r.c.begin() + static_cast<long>(k));
    return r;
  }
};

template <class K>
inline bool is_zero(const Poly<K>& p) {
  return p.zero();
}

// Quotient/remainder; requires invertible leading coefficient of b.
template <class K>
inline std::pair<Poly<K>, Poly<K>> poly_divmod(const Poly<K>& a, const Poly<K>& b) {
  if (b.zero()) throw domain_error("poly_divmod: division by zero polynomial");
  auto binv = try_invert(b.lead());
  if (!binv) throw domain_error("poly_divmod: leading coefficient not a unit");
  Poly<K> q, r = a;
  while (!r.zero() && r.degree() >= b.degree()) {
    size_t d = static_cast<size_t>(r.degree() - b.degree());
    K f = r.lead() * (*binv);
    q = q + Poly<K>::monomial(f, d);
    r = r - (b * f).shift_up(d);
  }
  return {q, r};
}

template <class K>
inline Poly<K> poly_monic(const Poly<K>& a) {
  if (a.zero()) return a;
  auto inv = try_invert(a.lead());
  if (!inv) throw domain_error("poly_monic: leading coefficient not a unit");
  return a * (*inv);
}

// Monic gcd over a field.
template <class K>
inline Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.zero()) {
    auto [q, r] = poly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.zero() ? a : poly_monic(a);
}

template <class K>
inline std::string poly_str(const Poly<K>& p, const std::string& var,
                            std::string (*fmt)(const K&)) {
  if (p.zero()) return "0";
  std::string s;
  for (size_t i = p.c.size(); i-- > 0;) {
    if (is_zero(p.c[i])) continue;
    if (!s.empty()) s += " + ";
    s += fmt(p.c[i]);
    if (i >= 1) s += "*" + var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

}  // namespace monodromy
