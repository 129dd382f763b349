#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nfcert/planar.hpp"

using namespace nfcert;

namespace {

Mono mono(int a, int b = 0, int c = 0, int d = 0) {
  Mono m;
  m[0] = a; m[1] = b; m[2] = c; m[3] = d;
  return m;
}

FoldHopfCoeffs fold(double a1, double a2, double a3, double a4, double w = 1.0) {
  FoldHopfCoeffs c;
  c.omega = w;
  c.alpha = {a1, a2, a3, a4};
  c.kappa01 = a4;
  c.kappa02 = a3;
  c.kappa11 = Complex(a1, a2);
  return c;
}

DoubleHopfCoeffs dhopf(double a1, double a2, double a3, double a4,
                       double w1 = 1.0, double w2 = 1.4142135623730951) {
  DoubleHopfCoeffs c;
  c.omega1 = w1;
  c.omega2 = w2;
  c.alpha = {a1, a2, a3, a4};
  c.beta = {0, 0, 0, 0};
  return c;
}

}  // namespace

TEST_CASE("planar reduction fields") {
  // radial/axis system: r' = a1 r x3, x3' = a3 r^2 + a4 x3^2
  auto s = make_planar(fold(1, 0.5, 1, 2));
  CHECK(s.kind == PlanarKind::Case1);
  CHECK(s.field.comp[0].coeff(mono(1, 1)) == 1.0);
  CHECK(s.field.comp[0].terms().size() == 1);
  CHECK(s.field.comp[1].coeff(mono(2, 0)) == 1.0);
  CHECK(s.field.comp[1].coeff(mono(0, 2)) == 2.0);

  // family A at a = 1
  auto sa = make_planar(fold(-0.5, 1, 2, 1));
  CHECK(sa.field.comp[0].coeff(mono(1, 1)) == -0.5);
  CHECK(sa.field.comp[1].coeff(mono(2, 0)) == 2.0);
  CHECK(sa.field.comp[1].coeff(mono(0, 2)) == 1.0);

  // two-radius system: r1' = (a1 r1^2 + a2 r2^2) r1, r2' = (a3 r1^2 + a4 r2^2) r2
  auto d = make_planar(dhopf(1, 2, 3, 4));
  CHECK(d.kind == PlanarKind::Case2);
  CHECK(d.field.comp[0].coeff(mono(3, 0)) == 1.0);
  CHECK(d.field.comp[0].coeff(mono(1, 2)) == 2.0);
  CHECK(d.field.comp[1].coeff(mono(2, 1)) == 3.0);
  CHECK(d.field.comp[1].coeff(mono(0, 3)) == 4.0);

  // exact variants carry the same monomials over exact fractions
  auto e1 = planar_case1_exact(Rational(1), Rational(1), Rational(2));
  CHECK(e1.comp[0].coeff(mono(1, 1)) == Rational(1));
  CHECK(e1.comp[1].coeff(mono(0, 2)) == Rational(2));
  auto e2 = planar_case2_exact(Rational(1), Rational(2), Rational(3), Rational(4));
  CHECK(e2.comp[0].coeff(mono(3, 0)) == Rational(1));
  CHECK(e2.comp[1].coeff(mono(2, 1)) == Rational(3));
}

TEST_CASE("closed-form conserved quantity, radial/axis case") {
  auto q = first_integral(make_planar_case1(1, 1, 2));
  CHECK_FALSE(q.degenerate);
  // Q = r^(-4) (r^2 + x3^2)
  CHECK(q(1, 1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(q(0.1, -0.05) == doctest::Approx(125.0).epsilon(1e-12));

  CHECK(q.in_domain(0.3, -5.0));
  CHECK_FALSE(q.in_domain(0.0, 0.1));
  CHECK_FALSE(q.in_domain(-1.0, 0.1));
  CHECK_THROWS_AS(q(-1.0, 0.1), Error);

  // a4 = -a1 gives a polynomial invariant: Q = r^2 (r^2 - 2 x3^2)
  auto qp = first_integral(make_planar_case1(1, 1, -1));
  RationalPoly poly;
  poly.add_term(mono(4), Rational(1));
  poly.add_term(mono(2, 2), Rational(-2));
  for (auto [r, z] : {std::pair{1.0, 1.0}, {0.4, -0.3}, {2.0, 0.7}}) {
    CHECK(qp(r, z) ==
          doctest::Approx(poly.evaluate<double>({r, z})).epsilon(1e-12));
  }

  // a4 = a1 collapses the quantity to a constant and is flagged
  auto qd = first_integral(make_planar_case1(1, 1, 1));
  CHECK(qd.degenerate);
  CHECK_FALSE(qd.degenerate_note.empty());
  CHECK(qd(2, 3) == doctest::Approx(1.0));
  CHECK(qd(0.5, -0.2) == doctest::Approx(1.0));

  // a1 = 0 leaves no radial dynamics to reduce against
  try {
    first_integral(make_planar_case1(0, 1, 2));
    FAIL("expected an undefined-quantity rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Undefined);
  }
}

TEST_CASE("closed-form conserved quantity, two-radius case") {
  auto q = first_integral(make_planar_case2(1, 2, 3, 4));
  CHECK_FALSE(q.degenerate);
  // exponent a2 a3 - a1 a4 = 2; at (1,1) the scaled inner factor is -4
  CHECK(q(1, 1) == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(q.in_domain(0.2, 0.4));
  CHECK_FALSE(q.in_domain(0.2, 0.0));
  CHECK_THROWS_AS(q(0.2, -0.4), Error);

  // negative inner factor with an odd integer exponent keeps its sign
  auto qodd = first_integral(make_planar_case2(1, 1, 2, -1));
  CHECK(qodd(2, 1) < 0.0);
  // at the inner-factor zero the quantity vanishes (positive exponent)
  CHECK(std::abs(qodd(std::sqrt(2.0), 1.0)) < 1e-30);

  // zero exponent with vanishing inner factor falls back to the outer part
  auto qzero = first_integral(make_planar_case2(1, -1, 2, -2));
  CHECK(qzero(1, 1) == doctest::Approx(1.0).epsilon(1e-12));

  // negative inner factor with a fractional exponent has no real value
  auto qfrac = first_integral(make_planar_case2(1, 0.5, 1.0 / 3.0, 1));
  try {
    qfrac(0.1, 1.0);
    FAIL("expected a domain rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }

  // a2 = a4 collapses the quantity to a constant and is flagged
  auto qd = first_integral(make_planar_case2(2, 1, 1, 1));
  CHECK(qd.degenerate);
  CHECK(qd(1, 1) == doctest::Approx(1.0));
  CHECK(qd(0.3, 0.8) == doctest::Approx(qd(1.2, 0.4)).epsilon(1e-12));

  // a1 = a3 makes the construction itself undefined
  try {
    first_integral(make_planar_case2(1, 2, 1, 4));
    FAIL("expected an undefined-quantity rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Undefined);
  }
}

TEST_CASE("standalone evaluators agree with the factory") {
  CHECK(first_integral_case1({1, 1, 2}, 0.1, -0.05) == doctest::Approx(125.0));
  CHECK(first_integral_case2({1, 2, 3, 4}, 1, 1) == doctest::Approx(16.0));
}

TEST_CASE("conserved quantity is constant along the flow") {
  auto s = make_planar_case1(1, 1, 2);
  auto q = first_integral(s);
  IntegrateOptions opts;
  opts.rtol = 1e-10;
  opts.atol = 1e-12;
  opts.in_domain = [&](const std::vector<double>& x) {
    return q.in_domain(x[0], x[1]);
  };
  auto traj = integrate(s.field, {0.1, -0.05}, 5.0, opts);
  REQUIRE(traj.reason == Termination::TimeReached);
  double drift = conservation_drift(
      [&](const std::vector<double>& x) { return q(x[0], x[1]); }, traj);
  CHECK(drift <= 1e-9);

  // a wrong candidate drifts by orders of magnitude more
  double wrong = conservation_drift(
      [](const std::vector<double>& x) { return x[0] * x[0] + x[1] * x[1]; },
      traj);
  CHECK(wrong >= 1e-2);

  // constants never drift
  double flat = conservation_drift(
      [](const std::vector<double>&) { return 7.0; }, traj);
  CHECK(flat == 0.0);

  // two-radius flow
  auto s2 = make_planar_case2(1, 2, 3, 4);
  auto q2 = first_integral(s2);
  IntegrateOptions o2 = opts;
  o2.in_domain = [&](const std::vector<double>& x) {
    return q2.in_domain(x[0], x[1]);
  };
  auto t2 = integrate(s2.field, {0.1, 0.1}, 5.0, o2);
  REQUIRE(t2.reason == Termination::TimeReached);
  double d2 = conservation_drift(
      [&](const std::vector<double>& x) { return q2(x[0], x[1]); }, t2);
  CHECK(d2 <= 1e-9);
}

TEST_CASE("integrator: fixed steps, order, and degenerate starts") {
  // linear decay x' = -x integrates at fifth order
  PolyVec<double> dec(2);
  dec.comp[0].add_term(unit_mono(0), -1.0);
  dec.comp[1].add_term(unit_mono(1), -1.0);

  IntegrateOptions f1;
  f1.fixed_step = true;
  f1.fixed_h = 0.1;
  auto t1 = integrate(dec, {1.0, 0.0}, 1.0, f1);
  IntegrateOptions f2 = f1;
  f2.fixed_h = 0.05;
  auto t2 = integrate(dec, {1.0, 0.0}, 1.0, f2);
  CHECK(t1.rejected == 0);  // fixed mode never rejects
  CHECK(t2.rejected == 0);
  double e1 = std::abs(t1.states.back()[0] - std::exp(-1.0));
  double e2 = std::abs(t2.states.back()[0] - std::exp(-1.0));
  CHECK(e1 / e2 > 20.0);   // halving the step gains about 2^5
  CHECK(e1 / e2 < 50.0);

  // starting at the equilibrium stays there
  auto s = make_planar_case1(1, 1, 2);
  auto t0 = integrate(s.field, {0.0, 0.0}, 2.0, {});
  for (const auto& x : t0.states) {
    CHECK(x[0] == 0.0);
    CHECK(x[1] == 0.0);
  }

  // the axis r = 0 is invariant, exactly
  auto ta = integrate(s.field, {0.0, 0.3}, 1.0, {});
  for (const auto& x : ta.states) CHECK(x[0] == 0.0);
}

TEST_CASE("integrator respects the scaling symmetry of the reductions") {
  // quadratic case: x(t) -> s x(s t)
  auto s1 = make_planar_case1(1, 1, 2);
  IntegrateOptions o;
  o.rtol = 1e-12;
  o.atol = 1e-14;
  auto base = integrate_sampled(s1.field, {0.1, -0.05}, {2.0}, o);
  auto scaled = integrate_sampled(s1.field, {0.2, -0.1}, {1.0}, o);
  CHECK(std::abs(2 * base.states.back()[0] - scaled.states.back()[0]) <= 1e-6);
  CHECK(std::abs(2 * base.states.back()[1] - scaled.states.back()[1]) <= 1e-6);

  // cubic case: x(t) -> s x(s^2 t)
  auto s2 = make_planar_case2(1, 2, 3, 4);
  auto b2 = integrate_sampled(s2.field, {0.1, 0.1}, {2.0}, o);
  auto c2 = integrate_sampled(s2.field, {0.2, 0.2}, {0.5}, o);
  CHECK(std::abs(2 * b2.states.back()[0] - c2.states.back()[0]) <= 1e-6);
  CHECK(std::abs(2 * b2.states.back()[1] - c2.states.back()[1]) <= 1e-6);
}

TEST_CASE("integrator terminations") {
  // x' = 1 + x^2 blows past the guard near t = pi/2 + guard margin
  PolyVec<double> up(2);
  up.comp[0] = Polynomial<double>::constant(1.0);
  up.comp[0].add_term(mono(2), 1.0);
  auto tb = integrate(up, {0.0, 0.0}, 10.0, {});
  CHECK(tb.reason == Termination::BlowUpGuard);
  CHECK(tb.times.back() < 1.6);

  // leaving a declared domain stops the run
  PolyVec<double> dec(2);
  dec.comp[0].add_term(unit_mono(0), -1.0);
  dec.comp[1].add_term(unit_mono(1), -1.0);
  IntegrateOptions od;
  od.in_domain = [](const std::vector<double>& x) { return x[0] > 0.5; };
  auto td = integrate(dec, {1.0, 0.2}, 5.0, od);
  CHECK(td.reason == Termination::DomainExit);
  CHECK(td.times.back() < 0.75);

  // with the guard disabled the step size underflows instead
  IntegrateOptions og;
  og.guard = 1e305;
  try {
    integrate(up, {0.0, 0.0}, 10.0, og);
    FAIL("expected a stiffness rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StiffnessFailure);
  }

  // sampled runs keep the samples reached before termination
  auto ts = integrate_sampled(up, {0.0, 0.0}, {0.5, 1.0, 1.4, 2.0, 3.0}, {});
  CHECK(ts.reason == Termination::BlowUpGuard);
  CHECK(ts.times.size() == 3);

  // sample times must not decrease
  CHECK_THROWS_AS(integrate_sampled(dec, {1.0, 0.0}, {1.0, 0.5}, {}), Error);
}

TEST_CASE("reductions shadow the full truncated systems") {
  FoldHopfCoeffs c = fold(1, 1, 1, 2);
  CHECK(reduction_consistency(c, {0.1, 0.0, -0.05}, 3.0) <= 1e-9);

  DoubleHopfCoeffs d = dhopf(1, 2, 3, 4);
  CHECK(reduction_consistency(d, {0.1, 0.0, 0.1, 0.0}, 3.0) <= 1e-9);
}

TEST_CASE("full truncated systems in the original coordinates") {
  auto f = fold_hopf_truncated({1, 1, 1, 2}, 1.0);
  REQUIRE(f.dim == 3);
  // x1' = -w x2 + a1 x1 x3 - a2 x2 x3
  CHECK(f.comp[0].coeff(mono(0, 1, 0)) == -1.0);
  CHECK(f.comp[0].coeff(mono(1, 0, 1)) == 1.0);
  CHECK(f.comp[0].coeff(mono(0, 1, 1)) == -1.0);
  // x2' = w x1 + a2 x1 x3 + a1 x2 x3
  CHECK(f.comp[1].coeff(mono(1, 0, 0)) == 1.0);
  CHECK(f.comp[1].coeff(mono(1, 0, 1)) == 1.0);
  CHECK(f.comp[1].coeff(mono(0, 1, 1)) == 1.0);
  // x3' = a3 (x1^2 + x2^2) + a4 x3^2
  CHECK(f.comp[2].coeff(mono(2, 0, 0)) == 1.0);
  CHECK(f.comp[2].coeff(mono(0, 2, 0)) == 1.0);
  CHECK(f.comp[2].coeff(mono(0, 0, 2)) == 2.0);

  // the squared radius follows the reduced radial equation:
  // d/dt (x1^2 + x2^2) = 2 a1 (x1^2 + x2^2) x3
  std::vector<double> x{0.3, -0.2, 0.4};
  auto v = f.evaluate<double>(x);
  double lhs = 2 * (x[0] * v[0] + x[1] * v[1]);
  double rhs = 2 * 1.0 * (x[0] * x[0] + x[1] * x[1]) * x[2];
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));

  auto g = double_hopf_truncated({1, 2, 3, 4}, {0, 0, 0, 0}, 1.0, std::sqrt(2.0));
  REQUIRE(g.dim == 4);
  std::vector<double> y{0.3, -0.1, 0.2, 0.25};
  auto w = g.evaluate<double>(y);
  double p1 = y[0] * y[0] + y[1] * y[1], p2 = y[2] * y[2] + y[3] * y[3];
  CHECK(2 * (y[0] * w[0] + y[1] * w[1]) ==
        doctest::Approx(2 * (1 * p1 + 2 * p2) * p1).epsilon(1e-13));
  CHECK(2 * (y[2] * w[2] + y[3] * w[3]) ==
        doctest::Approx(2 * (3 * p1 + 4 * p2) * p2).epsilon(1e-13));
}

TEST_CASE("no further equilibria near the origin") {
  auto s = make_planar_case1(1, 1, 2);
  double rho = 0.1, worst = 1e300;
  for (int k = 0; k < 360; ++k) {
    double th = k * M_PI / 180.0;
    auto v = s.field.evaluate<double>({rho * std::cos(th), rho * std::sin(th)});
    worst = std::min(worst, std::hypot(v[0], v[1]));
  }
  CHECK(worst > 1e-3 * rho * rho);
}

TEST_CASE("commuting-factor relation: a field checked against itself is trivial") {
  auto s = make_planar_case1(1, 1, 2);
  auto q = first_integral(s);
  std::vector<std::array<double, 2>> samples{{0.1, -0.05}, {0.2, 0.1}, {0.15, 0.07}};
  auto rep = check_integral_commuter_relation(
      s.field, s.field, [&](double r, double z) { return q(r, z); }, samples);
  CHECK(rep.holds);
  bool trivial_note = false;
  for (const auto& n : rep.notes)
    if (n.find("trivial") != std::string::npos) trivial_note = true;
  CHECK(trivial_note);
}

TEST_CASE("commuting-factor relation: precondition violations are identified") {
  // p the scaling field, q the rotation; y/x is conserved along p but not q
  PolyVec<double> p(2), q(2);
  p.comp[0].add_term(unit_mono(0), 1.0);
  p.comp[1].add_term(unit_mono(1), 1.0);
  q.comp[0].add_term(unit_mono(1), -1.0);
  q.comp[1].add_term(unit_mono(0), 1.0);

  std::vector<std::array<double, 2>> samples{{0.7, 0.3}};
  try {
    check_integral_commuter_relation(
        p, q, [](double x, double y) { return y / x; }, samples);
    FAIL("expected a precondition rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PreconditionFailed);
    std::string msg = e.what();
    CHECK(msg.find("DQ.q") != std::string::npos);
    CHECK(msg.find("1.18") != std::string::npos);
  }
}

TEST_CASE("commuting-factor relation: polynomial multiples satisfy it") {
  auto s = make_planar_case1(1, 1, -1);
  RationalPoly qpoly;
  qpoly.add_term(mono(4), Rational(1));
  qpoly.add_term(mono(2, 2), Rational(-2));
  Polynomial<double> qd = qpoly.map_coeffs<double>([](const Rational& r) {
    return to_double(r);
  });

  PolyVec<double> qfield(2);
  qfield.comp[0] = qd * s.field.comp[0];
  qfield.comp[1] = qd * s.field.comp[1];

  std::vector<std::array<double, 2>> samples{{0.8, 0.3}, {0.5, -0.4}, {1.1, 0.2}};
  auto rep = check_integral_commuter_relation(
      s.field, qfield,
      [&](double r, double z) { return qd.evaluate<double>({r, z}); }, samples);
  CHECK(rep.holds);
  CHECK(rep.max_parallel_residual <= 1e-5);
}
