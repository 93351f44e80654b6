#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "monodromy/polynomial.hpp"
#include "monodromy/rational.hpp"

namespace monodromy {

using QPoly = Poly<Rational>;

// Yun's squarefree decomposition: f = prod factors[i]^(i+1), factors pairwise
// coprime and squarefree (entries may be constant 1).
inline std::vector<QPoly> yun_squarefree(const QPoly& f) {
  std::vector<QPoly> out;
  if (f.zero() || f.degree() == 0) return out;
  QPoly fp = f.derivative();
  QPoly g = poly_gcd(f, fp);
  if (g.degree() == 0) {
    out.push_back(poly_monic(f));
    return out;
  }
  QPoly w = poly_divmod(f, g).first;
  QPoly y = poly_divmod(fp, g).first;
  QPoly z = y - w.derivative();
  while (!w.zero() && w.degree() > 0) {
    QPoly a = poly_gcd(w, z);
    if (a.zero()) break;
    out.push_back(poly_monic(a));
    w = poly_divmod(w, a).first;
    y = poly_divmod(z, a).first;
    z = y - w.derivative();
  }
  return out;
}

inline std::vector<QPoly> sturm_chain(const QPoly& f) {
  std::vector<QPoly> chain;
  if (f.zero()) return chain;
  chain.push_back(f);
  QPoly d = f.derivative();
  if (d.zero()) return chain;
  chain.push_back(d);
  while (true) {
    const QPoly& a = chain[chain.size() - 2];
    const QPoly& b = chain.back();
    QPoly r = poly_divmod(a, b).second;
    if (r.zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

inline int sign_at(const QPoly& p, const Rational& x) {
  if (p.zero()) return 0;
  return p.template eval<Rational>(x).sign();
}

inline int variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s != 0) {
      if (prev != 0 && s != prev) ++var;
      prev = s;
    }
  }
  return var;
}

// Number of distinct real roots of squarefree f in (a, b]; f(a), f(b) must be
// usable (Sturm handles endpoint roots of f itself correctly for (a, b]).
inline int sturm_count(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

// 1 + max |a_i / a_n| bounds every real root in absolute value.
inline Rational cauchy_root_bound(const QPoly& f) {
  if (f.zero() || f.degree() == 0) return Rational(1);
  Rational m(0);
  Rational lead = rat_abs(f.lead());
  for (size_t i = 0; i + 1 < f.c.size(); ++i) m = std::max(m, rat_abs(f.c[i]));
  return m / lead + 1;
}

// Simplest rational (smallest denominator, then numerator) in [a, b].
inline Rational simplest_rational_in(const Rational& a, const Rational& b) {
  if (a > b) throw domain_error("simplest_rational_in: empty interval");
  if (a <= 0 && 0 <= b) return Rational(0);
  if (b < 0) return -simplest_rational_in(-b, -a);
  Int fa = rat_floor(a);
  if (Rational(fa) == a) return a;
  if (Rational(fa + 1) <= b) return Rational(fa + 1);
  Rational ra = a - Rational(fa), rb = b - Rational(fa);
  return Rational(fa) + rat_inv(simplest_rational_in(rat_inv(rb), rat_inv(ra)));
}

struct IsolatedRoot {
  Rational lo, hi;               // lo < root <= hi, with f(lo) != 0
  int multiplicity = 1;          // multiplicity in the original polynomial
  std::optional<Rational> exact; // set when the root is rational
};

// Isolate the real roots of squarefree f into disjoint half-open intervals.
inline std::vector<std::pair<Rational, Rational>> isolate_squarefree(const QPoly& f) {
  std::vector<std::pair<Rational, Rational>> out;
  if (f.zero() || f.degree() <= 0) return out;
  auto chain = sturm_chain(f);
  Rational bound = cauchy_root_bound(f);
  struct Seg {
    Rational a, b;
    int n;
  };
  std::vector<Seg> work;
  int total = sturm_count(chain, -bound, bound);
  if (total > 0) work.push_back({-bound, bound, total});
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.n == 1) {
      out.emplace_back(s.a, s.b);
      continue;
    }
    Rational mid = (s.a + s.b) / 2;
    // keep endpoints off the roots of f
    while (sign_at(f, mid) == 0) mid = (s.a + mid) / 2;
    int left = sturm_count(chain, s.a, mid);
    if (left > 0) work.push_back({s.a, mid, left});
    if (s.n - left > 0) work.push_back({mid, s.b, s.n - left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

// Shrink an isolating interval of squarefree f below the given width.
inline std::pair<Rational, Rational> tighten(const QPoly& f, Rational lo, Rational hi,
                                             const Rational& width) {
  int shi = sign_at(f, hi);
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    int sm = sign_at(f, mid);
    if (sm == 0) {
      // mid is the root; return a tiny bracket around it
      Rational h = width / 2;
      return {mid - h, mid + h};
    }
    if (sm == shi)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

// All real roots of f with multiplicities; rational roots are reported exactly
// (recognized by simplest-rational reconstruction inside the isolating box and
// verified by exact evaluation).
inline std::vector<IsolatedRoot> real_roots(const QPoly& f) {
  std::vector<IsolatedRoot> out;
  if (f.zero() || f.degree() <= 0) return out;
  auto factors = yun_squarefree(f);
  for (size_t k = 0; k < factors.size(); ++k) {
    const QPoly& g = factors[k];
    if (g.degree() <= 0) continue;
    for (auto [lo, hi] : isolate_squarefree(g)) {
      IsolatedRoot r;
      r.multiplicity = static_cast<int>(k + 1);
      // try to recognize a rational root
      for (int pass = 0; pass < 64; ++pass) {
        Rational cand = simplest_rational_in(lo, hi);
        if (sign_at(g, cand) == 0) {
          r.exact = cand;
          break;
        }
        Rational w = (hi - lo) / 16;
        if (w.is_zero()) break;
        auto t = tighten(g, lo, hi, w);
        lo = t.first;
        hi = t.second;
        if (pass >= 8 && denominator(cand) > Int(1) << 256) break;
      }
      if (!r.exact) {
        auto t = tighten(g, lo, hi, Rational(1, Int(1) << 96));
        lo = t.first;
        hi = t.second;
      }
      r.lo = lo;
      r.hi = hi;
      out.push_back(std::move(r));
    }
  }
  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    Rational va = a.exact ? *a.exact : (a.lo + a.hi) / 2;
    Rational vb = b.exact ? *b.exact : (b.lo + b.hi) / 2;
    return va < vb;
  });
  return out;
}

template <class Real>
inline Real root_value(const IsolatedRoot& r) {
  if (r.exact) return static_cast<Real>(to_ld(*r.exact));
  return static_cast<Real>(to_ld((r.lo + r.hi) / 2));
}

}  // namespace monodromy
