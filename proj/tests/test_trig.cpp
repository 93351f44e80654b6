#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "monodromy/trig.hpp"

using namespace monodromy;

namespace {
QPoly qp(std::initializer_list<long> cs) {
  QPoly p;
  for (long v : cs) p.c.push_back(Rational(v));
  p.normalize();
  return p;
}
}  // namespace

TEST_CASE("squarefree decomposition and root isolation") {
  // (x-1)^2 (x+2) (x^2-2)
  QPoly f = qp({-1, 1}) * qp({-1, 1}) * qp({2, 1}) * qp({-2, 0, 1});
  auto roots = real_roots(f);
  REQUIRE(roots.size() == 4);
  CHECK(roots[0].exact.value() == Rational(-2));
  CHECK(roots[0].multiplicity == 1);
  CHECK(!roots[1].exact.has_value());  // -sqrt(2)
  CHECK(roots[2].exact.value() == Rational(1));
  CHECK(roots[2].multiplicity == 2);
  CHECK(!roots[3].exact.has_value());  // +sqrt(2)
  long double s2 = root_value<long double>(roots[3]);
  CHECK(std::abs(s2 - std::sqrt(2.0L)) < 1e-18L);
}

TEST_CASE("simplest rational reconstruction") {
  CHECK(simplest_rational_in(Rational(1, 3), Rational(1, 2)) == Rational(1, 2));
  CHECK(simplest_rational_in(Rational(-1, 2), Rational(1, 3)) == Rational(0));
  CHECK(simplest_rational_in(Rational(7, 5), Rational(3, 2)) == Rational(3, 2));
  CHECK(simplest_rational_in(Rational(22, 7), Rational(23, 7)) == Rational(13, 4));
}

TEST_CASE("trig polynomial arithmetic folds s^2 = 1 - c^2") {
  TrigPoly s = TrigPoly::monomial(Rational(1), 0, 1);
  TrigPoly ss = s * s;
  CHECK(ss.a == qp({1, 0, -1}));
  CHECK(ss.b.zero());
  TrigPoly c = TrigPoly::monomial(Rational(1), 1, 0);
  TrigPoly ident = ss + c * c;
  CHECK(ident.a == qp({1}));
}

TEST_CASE("trig derivatives") {
  TrigPoly s = TrigPoly::monomial(Rational(1), 0, 1);
  TrigPoly c = TrigPoly::monomial(Rational(1), 1, 0);
  CHECK(s.derivative() == c);
  CHECK(c.derivative() == -s);
  // (s/c)' = 1/c^2
  TrigRational tanphi(s, qp({0, 1}));
  TrigRational d = tanphi.derivative();
  CHECK(d == TrigRational(TrigPoly(Rational(1)), qp({0, 0, 1})));
}

TEST_CASE("trig rational canonical form and field operations") {
  TrigPoly s = TrigPoly::monomial(Rational(1), 0, 1);
  TrigPoly c = TrigPoly::monomial(Rational(1), 1, 0);
  // s^2/(1 - c^2) == 1
  TrigRational x(s * s, qp({1, 0, -1}));
  CHECK(x == TrigRational(1));
  // (1 - c^2)/s == s
  TrigRational y = TrigRational(TrigPoly(qp({1, 0, -1}), QPoly())) / TrigRational(TrigPoly(s));
  CHECK(y == TrigRational(TrigPoly(s)));

  TrigRational z(TrigPoly(qp({1, 2}), qp({3})), qp({0, 1, 4}));
  TrigRational prod = z * z.inverse();
  CHECK(prod == TrigRational(1));
  CHECK((z - z).zero());

  CHECK(z.at_zero() == (Rational(3) + Rational(3)* 0 + Rational(1, 1) * 0) / Rational(5) + 0);
}

TEST_CASE("evaluation at rational circle points and angles") {
  TrigPoly s = TrigPoly::monomial(Rational(1), 0, 1);
  TrigPoly c = TrigPoly::monomial(Rational(1), 1, 0);
  TrigRational f(c * c + s * TrigPoly(Rational(2)));
  CHECK(f.eval_point(Rational(3, 5), Rational(4, 5)) == Rational(9, 25) + Rational(8, 5));
  long double phi = 0.37L;
  long double want = std::cos(phi) * std::cos(phi) + 2 * std::sin(phi);
  CHECK(std::abs(f.eval_angle(phi) - want) < 1e-17L);
}

TEST_CASE("taylor expansion at quadrant points matches numeric evaluation") {
  TrigPoly s = TrigPoly::monomial(Rational(1), 0, 1);
  TrigRational f(TrigPoly(qp({2, 1}), qp({-1})), qp({3, 0, 1}));  // (2 + c - s)/(3 + c^2)
  struct Pt {
    Rational c0, s0;
    long double phi;
  } pts[] = {{Rational(1), Rational(0), 0.0L},
             {Rational(0), Rational(1), PI_L / 2},
             {Rational(-1), Rational(0), PI_L},
             {Rational(0), Rational(-1), 3 * PI_L / 2}};
  for (const auto& p : pts) {
    auto t = trig_taylor<Rational>(f, p.c0, p.s0, 10);
    for (long double u : {0.01L, -0.02L, 0.05L}) {
      long double series_val = 0, up = 1;
      for (long e = 0; e <= 10; ++e) {
        series_val += to_ld(t.coeff(e)) * up;
        up *= u;
      }
      CHECK(std::abs(series_val - f.eval_angle(p.phi + u)) < 1e-14L);
    }
  }
  // sin about 0: u - u^3/6 + u^5/120
  auto ts = trig_taylor<Rational>(TrigRational(TrigPoly(s)), Rational(1), Rational(0), 6);
  CHECK(ts.coeff(1) == Rational(1));
  CHECK(ts.coeff(3) == Rational(-1, 6));
  CHECK(ts.coeff(5) == Rational(1, 120));
}

TEST_CASE("zeros of trig polynomials on the circle") {
  // sin^2: zeros of multiplicity 2 at 0 and pi
  TrigPoly s2(qp({1, 0, -1}), QPoly());
  auto zs = trig_zeros(s2);
  REQUIRE(zs.size() == 2);
  CHECK(zs[0].quadrant == 0);
  CHECK(zs[0].multiplicity == 2);
  CHECK(zs[1].quadrant == 2);
  CHECK(zs[1].multiplicity == 2);

  // 3c - 1: two simple zeros at +-acos(1/3)
  TrigPoly f(qp({-1, 3}), QPoly());
  auto zf = trig_zeros(f);
  REQUIRE(zf.size() == 2);
  CHECK(zf[0].multiplicity == 1);
  CHECK(zf[0].quadrant == -1);
  long double a = acosl(1.0L / 3);
  CHECK(std::abs(zf[0].angle - a) < 1e-12L);
  CHECK(std::abs(zf[1].angle - (2 * PI_L - a)) < 1e-12L);

  // 1 + c: single zero at pi of multiplicity 2
  auto zc = trig_zeros(TrigPoly(qp({1, 1}), QPoly()));
  REQUIRE(zc.size() == 1);
  CHECK(zc[0].quadrant == 2);
  CHECK(zc[0].multiplicity == 2);
}

TEST_CASE("semidefiniteness of trig polynomials") {
  TrigPoly s2(qp({1, 0, -1}), QPoly());
  CHECK(trig_sign(s2 * Rational(5)) == TrigSign::PositiveSemi);
  CHECK(trig_sign(s2 * Rational(-2)) == TrigSign::NegativeSemi);
  CHECK(trig_sign(TrigPoly::monomial(Rational(1), 0, 1)) == TrigSign::Indefinite);
  CHECK(trig_sign(TrigPoly(qp({2, 1}), QPoly())) == TrigSign::PositiveSemi);  // 2 + c > 0
  CHECK(trig_sign(TrigPoly()) == TrigSign::IdenticallyZero);
}
