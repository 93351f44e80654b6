#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "monodromy/blowup.hpp"

using namespace monodromy;
using namespace monodromy::fixtures;

namespace {
TrigRational tr_const(long v) { return TrigRational(v); }

TrigRational sin2() {
  return TrigRational(TrigPoly(QPoly{Rational(1), Rational(0), Rational(-1)}, QPoly()));
}
}  // namespace

TEST_CASE("polar form of the focus family, lambda = 1") {
  auto pe = polar_blowup(focus_family(Rational(1)), 1, 1, 8);
  CHECK(pe.r == 0);
  CHECK(!pe.time_flipped);
  // dphi/dt = 1 + rho^2, drho/dt = -rho + rho^3
  CHECK(pe.G[0] == tr_const(1));
  CHECK(pe.G[1].zero());
  CHECK(pe.G[2] == tr_const(1));
  CHECK(pe.F[0] == tr_const(-1));
  CHECK(pe.F[1].zero());
  CHECK(pe.F[2] == tr_const(1));
  CHECK(pe.omega.empty());
  CHECK(!pe.zero_in_omega);
  CHECK(pe.weight_in_diagram);
}

TEST_CASE("polar form of the focus family, lambda = 0: common factor rho^2 removed") {
  auto pe = polar_blowup(focus_family(Rational(0)), 1, 1, 8);
  CHECK(pe.r == 2);
  CHECK(pe.G[0] == tr_const(1));
  CHECK(pe.F[0] == tr_const(1));
  for (size_t k = 1; k < pe.G.size(); ++k) {
    CHECK(pe.G[k].zero());
    CHECK(pe.F[k].zero());
  }
  CHECK(pe.omega.empty());
}

TEST_CASE("polar form of the two-weight family at (1,1)") {
  auto pe = polar_blowup(two_weight_family(Rational(2), Rational(1), Rational(1), Rational(0)),
                         1, 1, 8);
  CHECK(pe.r == 2);
  // G_2 = (3 l1 - l2) sin^2 = 5 sin^2, F_2 = sin (l2 cos + 3 mu l1 sin) = sin(cos + 6 sin)
  CHECK(pe.G[0] == scale(sin2(), Rational(5)));
  TrigRational f2(TrigPoly(QPoly{Rational(6), Rational(0), Rational(-6)}, QPoly{Rational(0), Rational(1)}));
  CHECK(pe.F[0] == f2);
  REQUIRE(pe.omega.size() == 2);
  CHECK(pe.omega[0].quadrant == 0);
  CHECK(pe.omega[0].multiplicity == 2);
  CHECK(pe.omega[1].quadrant == 2);
  CHECK(pe.omega[1].multiplicity == 2);
  CHECK(pe.zero_in_omega);
  // orientation: G_r >= 0 on a dense angle grid
  for (int a = 0; a < 1000; ++a) {
    long double v = pe.G[0].eval_angle(2 * PI_L * a / 1000.0L);
    CHECK(v >= -1e-18L);
  }
}

TEST_CASE("time flip restores a nonnegative leading angular coefficient") {
  auto f = focus_family(Rational(1));
  VectorFieldSpec g;
  g.P = -f.P;
  g.Q = -f.Q;
  g.iif_factors = f.iif_factors;
  auto pe = polar_blowup(g, 1, 1, 6);
  CHECK(pe.time_flipped);
  CHECK(pe.G[0] == tr_const(1));
  CHECK(pe.F[0] == tr_const(-1));
}

TEST_CASE("non-monodromic data is refused") {
  // dx/dt = x, dy/dt = -y: saddle; G_0 = -2cs changes sign
  VectorFieldSpec f;
  f.P = X();
  f.Q = -Y();
  CHECK_THROWS_AS(polar_blowup(f, 1, 1, 6), hypothesis_error);
  // radial field: angular speed identically zero
  CHECK_THROWS_AS(polar_blowup(radial_field(), 1, 1, 6), hypothesis_error);
  // non-singular origin
  VectorFieldSpec g;
  g.P = C(Rational(1));
  g.Q = Y();
  CHECK_THROWS_AS(polar_blowup(g, 1, 1, 6), hypothesis_error);
}

TEST_CASE("blow-up reconstructs the Cartesian field at random points") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> ang(0.0, 2 * 3.141592653589793);
  std::uniform_real_distribution<double> rad(0.01, 0.3);
  for (const auto& X : {focus_family(Rational(1)),
                        two_weight_family(Rational(2), Rational(1), Rational(1), Rational(0))}) {
    auto nd = newton_diagram(X);
    for (auto [p, q] : nd.weights) {
      auto pe = polar_blowup(X, p, q, 6);
      auto fe = make_field_eval(X, pe);
      for (int t = 0; t < 20; ++t) {
        long double phi = ang(rng), rho = rad(rng);
        long double c = cosl(phi), s = sinl(phi);
        long double x = powl(rho, p) * c, y = powl(rho, q) * s;
        long double J = powl(rho, p + q - 1) * fe.jac_angular(c, s);
        long double rr = powl(rho, pe.r);
        long double rdot = fe.R(phi, rho) * rr, tdot = fe.Theta(phi, rho) * rr;
        int fl = pe.time_flipped ? -1 : 1;
        long double xdot = p * powl(rho, p - 1) * rdot * c - powl(rho, p) * s * tdot;
        long double ydot = q * powl(rho, q - 1) * rdot * s + powl(rho, q) * c * tdot;
        long double Px = X.P.eval(x, y) * fl, Qy = X.Q.eval(x, y) * fl;
        CHECK(std::abs(xdot - Px) < 1e-10L * (1 + std::abs(Px)));
        CHECK(std::abs(ydot - Qy) < 1e-10L * (1 + std::abs(Qy)));
        (void)J;
      }
    }
  }
}

TEST_CASE("cylinder expansion of the inverse integrating factor, lambda = 1") {
  auto X = focus_family(Rational(1));
  auto pe = polar_blowup(X, 1, 1, 10);
  auto iif = polar_iif(X, pe, 10);
  CHECK(iif.m == 1);
  CHECK(iif.n == 1);
  CHECK(iif.m_sigma == 1);
  CHECK(iif.prefactor.empty());
  // V = rho(rho^2 - 1)/(1 + rho^2) = -rho + 2 rho^3 - 2 rho^5 + ...
  CHECK(iif.v_cyl.base.lead_coeff() == tr_const(-1));
  CHECK(iif.norm_rational == Rational(-1));
  // normalized slice: rho - 2 rho^3 + 2 rho^5 - ...
  CHECK(iif.v0->coeff(1) == Rational(1));
  CHECK(iif.v0->coeff(2) == Rational(0));
  CHECK(iif.v0->coeff(3) == Rational(-2));
  CHECK(iif.v0->coeff(5) == Rational(2));
}

TEST_CASE("cylinder expansion, lambda = 0: V = rho") {
  auto X = focus_family(Rational(0));
  auto pe = polar_blowup(X, 1, 1, 10);
  auto iif = polar_iif(X, pe, 10);
  CHECK(iif.m == 1);
  CHECK(iif.n == 1);
  CHECK(iif.norm_rational == Rational(1));
  CHECK(iif.v0->coeff(1) == Rational(1));
  for (long e = 2; e <= iif.v0->trunc; ++e) CHECK(iif.v0->coeff(e) == Rational(0));
}

TEST_CASE("cylinder expansion of the two-weight family: m = 1 with poles off the section") {
  auto X = two_weight_family(Rational(2), Rational(1), Rational(1), Rational(0));
  auto pe = polar_blowup(X, 1, 1, 10);
  auto iif = polar_iif(X, pe, 10);
  CHECK(iif.m == 1);
  CHECK(iif.n == 1);
  CHECK(iif.norm_rational == Rational(3, 5));
  // phi = 0 lies in Omega_11, and higher coefficients genuinely blow up there:
  // the section slice is not available until coordinates are rotated
  CHECK(!iif.v0.has_value());
  CHECK(!iif.v0_error.empty());
}

TEST_CASE("fractional Darboux exponent produces a Puiseux factor with the index law") {
  auto X = focus_family(Rational(0));
  X.iif_factors.clear();
  auto x = fixtures::X(), y = Y();
  X.iif_factors.push_back({x * x + y * y, Rational(1, 4)});
  auto pe = polar_blowup(X, 1, 1, 8);
  auto iif = polar_iif(X, pe, 8);
  CHECK(iif.n == 2);
  CHECK(iif.m == -5);
  CHECK(iif.m_sigma == -6);
  REQUIRE(iif.prefactor.size() == 1);
  CHECK(iif.prefactor[0].exponent == Rational(1, 4));
  CHECK(iif.v0->lead_exponent() == -6);
  CHECK(iif.v0->lead_coeff() == Rational(1));
  CHECK(iif.norm_rational == Rational(1, 2));
}

TEST_CASE("multiplicity and index are invariant under positive scaling of v") {
  auto X = focus_family(Rational(1));
  auto pe = polar_blowup(X, 1, 1, 8);
  auto a = polar_iif(X, pe, 8);
  auto Y2 = X;
  Y2.iif_factors.push_back({C(Rational(7, 3)), Rational(1)});
  auto b = polar_iif(Y2, pe, 8);
  CHECK(a.m == b.m);
  CHECK(a.n == b.n);
  CHECK(series_equal(*a.v0, *b.v0));
}

TEST_CASE("pde residual of the truncated expansion against F = R/Theta") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> ang(0.0, 2 * 3.141592653589793);
  std::uniform_real_distribution<double> rad(0.01, 0.1);
  for (const auto& X : {focus_family(Rational(1)), focus_family(Rational(0))}) {
    auto pe = polar_blowup(X, 1, 1, 14);
    auto iif = polar_iif(X, pe, 14);
    REQUIRE(iif.n == 1);
    auto fe = make_field_eval(X, pe);
    const auto& base = iif.v_cyl.base;
    auto V = [&](long double phi, long double rho) { return iif.eval(phi, rho); };
    auto Vphi = [&](long double phi, long double rho) {
      long double acc = 0, rp = powl(rho, base.lead);
      for (size_t i = 0; i < base.c.size(); ++i) {
        acc += base.c[i].derivative().eval_angle(phi) * rp;
        rp *= rho;
      }
      return acc;
    };
    auto Vrho = [&](long double phi, long double rho) {
      long double acc = 0, rp = powl(rho, base.lead - 1);
      for (size_t i = 0; i < base.c.size(); ++i) {
        long e = base.lead + static_cast<long>(i);
        acc += e * base.c[i].eval_angle(phi) * rp;
        rp *= rho;
      }
      return acc;
    };
    for (int t = 0; t < 50; ++t) {
      long double phi = ang(rng), rho = rad(rng);
      long double resid = Vphi(phi, rho) + Vrho(phi, rho) * fe.Fslope(phi, rho) -
                          fe.dF_drho(phi, rho) * V(phi, rho);
      long double scale = 1 + std::abs(fe.dF_drho(phi, rho) * V(phi, rho));
      CHECK(std::abs(resid) < 1e-8L * scale);
    }
  }
}

TEST_CASE("inverse integrating factor has no zeros off rho = 0 (sampled)") {
  auto X = focus_family(Rational(1));
  auto pe = polar_blowup(X, 1, 1, 8);
  auto fe = make_field_eval(X, pe);
  auto value = [&](long double phi, long double rho) {
    // V = v / N_T exactly
    long double x = rho * cosl(phi), y = rho * sinl(phi);
    long double nt = fe.Theta(phi, rho) * powl(rho, pe.r) * powl(rho, pe.p + pe.q - 1) *
                     fe.jac_angular(cosl(phi), sinl(phi));
    return darboux_eval(X, x, y) / nt;
  };
  CHECK(iif_nonvanishing_on_annulus(value, 0.5L));
}
