#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nfcert/criteria.hpp"

using namespace nfcert;

namespace {

FoldHopfCoeffs fold(double a1, double a2, double a3, double a4) {
  FoldHopfCoeffs c;
  c.omega = 1.0;
  c.alpha = {a1, a2, a3, a4};
  c.kappa01 = a4;
  c.kappa02 = a3;
  c.kappa11 = Complex(a1, a2);
  return c;
}

DoubleHopfCoeffs dhopf(double a1, double a2, double a3, double a4) {
  DoubleHopfCoeffs c;
  c.omega1 = 1.0;
  c.omega2 = std::sqrt(2.0);
  c.alpha = {a1, a2, a3, a4};
  return c;
}

bool has_hypothesis(const Verdict& v, const std::string& name, bool pass) {
  for (const auto& h : v.hypotheses)
    if (h.name == name) return h.pass == pass;
  return false;
}

}  // namespace

TEST_CASE("rationality check recognizes exact fractions") {
  auto r = rationality_check(0.5, 1000000, 1e-12);
  CHECK(r.status == RationalityEvidence::Status::Rational);
  CHECK(r.p == 1);
  CHECK(r.q == 2);
  CHECK(r.residual == 0.0);

  auto n = rationality_check(-2.0, 1000000, 1e-12);
  CHECK(n.status == RationalityEvidence::Status::Rational);
  CHECK(n.p == -2);
  CHECK(n.q == 1);
}

TEST_CASE("rationality check flags irrational-looking values") {
  // pi: every convergent with q <= 1e6 misses by more than 1e-12; the best
  // one within the bound is 1146408/364913
  auto r = rationality_check(M_PI, 1000000, 1e-12);
  CHECK(r.status == RationalityEvidence::Status::LikelyIrrational);
  CHECK(r.p == 1146408);
  CHECK(r.q == 364913);
  CHECK(r.residual == doctest::Approx(1.6107e-12).epsilon(1e-3));

  // with a loose tolerance and small bound the classic 355/113 wins
  auto c = rationality_check(M_PI, 400, 1e-6);
  CHECK(c.status == RationalityEvidence::Status::Rational);
  CHECK(c.p == 355);
  CHECK(c.q == 113);
  CHECK(c.residual == doctest::Approx(2.667e-7).epsilon(1e-3));

  // 2*sqrt(2)
  auto s = rationality_check(2.0 * std::sqrt(2.0), 1000000, 1e-12);
  CHECK(s.status == RationalityEvidence::Status::LikelyIrrational);
  CHECK(s.p == 665857);
  CHECK(s.q == 235416);
}

TEST_CASE("exact-fraction evidence") {
  auto e = rationality_exact(Rational(-200, 81));
  CHECK(e.status == RationalityEvidence::Status::ExactRational);
  CHECK(e.p == -200);
  CHECK(e.q == 81);
  CHECK(e.residual == 0.0);
}

TEST_CASE("three-dimensional verdicts: same-sign product certifies directly") {
  CriteriaConfig cfg;
  auto v = evaluate_fold_hopf(fold(1, 0.5, 1, 2), cfg);
  CHECK(v.outcome == Verdict::Outcome::Nonintegrable);
  CHECK(v.fired_condition == "main1.i");
  CHECK(has_hypothesis(v, "alpha1_nonzero", true));
}

TEST_CASE("three-dimensional verdicts: opposite signs need an irrational ratio") {
  CriteriaConfig cfg;
  // family A at a = 1: alpha = (-1/2, 1, 2, 1), ratio -2 is rational
  auto v = evaluate_fold_hopf(fold(-0.5, 1, 2, 1), cfg);
  CHECK(v.outcome == Verdict::Outcome::Inconclusive);
  REQUIRE(v.rationality.has_value());
  CHECK(v.rationality->status == RationalityEvidence::Status::Rational);
  CHECK(v.rationality->p == -2);
  CHECK(v.rationality->q == 1);

  // an irrational-looking ratio fires the opposite-sign condition
  auto w = evaluate_fold_hopf(fold(1, 0, 1, -std::sqrt(2.0)), cfg);
  CHECK(w.outcome == Verdict::Outcome::Nonintegrable);
  CHECK(w.fired_condition == "main1.ii");
  REQUIRE(w.rationality.has_value());
  CHECK(w.rationality->status == RationalityEvidence::Status::LikelyIrrational);
  // floating evidence is labelled as such
  CHECK_FALSE(w.caveats.empty());
}

TEST_CASE("three-dimensional verdicts: degenerate first slot is inconclusive") {
  CriteriaConfig cfg;
  auto v = evaluate_fold_hopf(fold(0, 1, 2, 3), cfg);
  CHECK(v.outcome == Verdict::Outcome::Inconclusive);
  CHECK(v.fired_condition.empty());
  CHECK(has_hypothesis(v, "alpha1_nonzero", false));
}

TEST_CASE("three-dimensional verdicts: exact ratio evidence upgrades the status") {
  CriteriaConfig cfg;
  cfg.exact_ratio = Rational(-200, 81);
  // family A at a = 9/10 (alpha1 < 0 < alpha4)
  auto v = evaluate_fold_hopf(fold(-0.3645 / 1.19, 0.905, 1.8 / 1.19, 0.9 / 1.19), cfg);
  CHECK(v.outcome == Verdict::Outcome::Inconclusive);
  REQUIRE(v.rationality.has_value());
  CHECK(v.rationality->status == RationalityEvidence::Status::ExactRational);
  CHECK(v.rationality->p == -200);
  CHECK(v.rationality->q == 81);
}

TEST_CASE("four-dimensional verdicts: the three conditions in order") {
  CriteriaConfig cfg;

  // same-sign middle product
  auto v2 = evaluate_double_hopf(dhopf(1, 1, 2, 2), cfg);
  CHECK(v2.outcome == Verdict::Outcome::Nonintegrable);
  // the same-sign condition is checked before the determinant, which
  // vanishes here (1*2 - 1*2 = 0)
  CHECK(v2.fired_condition == "main2.ii");

  // opposite signs with an irrational-looking ratio; the ratio is -sqrt(2),
  // whose best convergent under the default denominator bound still misses
  // by more than the default tolerance
  auto v3 = evaluate_double_hopf(dhopf(1, -std::sqrt(2.0), 2, 1), cfg);
  CHECK(v3.outcome == Verdict::Outcome::Nonintegrable);
  CHECK(v3.fired_condition == "main2.iii");
  REQUIRE(v3.rationality.has_value());
  CHECK(v3.rationality->status == RationalityEvidence::Status::LikelyIrrational);

  // opposite signs, rational ratio, but a nonzero determinant
  auto v1 = evaluate_double_hopf(dhopf(1, 2, 3, -1), cfg);
  CHECK(v1.outcome == Verdict::Outcome::Nonintegrable);
  CHECK(v1.fired_condition == "main2.i");

  // everything fails: opposite signs, rational ratio, zero determinant
  auto v0 = evaluate_double_hopf(dhopf(-2, 2, 1, -1), cfg);
  CHECK(v0.outcome == Verdict::Outcome::Inconclusive);
  CHECK(v0.fired_condition.empty());

  // degenerate gate: equal first/third slots
  auto vg = evaluate_double_hopf(dhopf(1, 5, 1, -2), cfg);
  CHECK(vg.outcome == Verdict::Outcome::Inconclusive);
  CHECK(has_hypothesis(vg, "alpha1_ne_alpha3", false));
}

TEST_CASE("four-dimensional verdicts: family B certifies by the same-sign condition") {
  CriteriaConfig cfg;
  cfg.exact_ratio = Rational(2, 3);
  double s2 = std::sqrt(2.0);
  auto v = evaluate_double_hopf(dhopf(-12.0 / 7 - 15.0 / 14 * s2, -8.0 / 7 + 5.0 / 7 * s2,
                                      -8.0 / 7 - 5.0 / 7 * s2, -12.0 / 7 + 15.0 / 14 * s2),
                                cfg);
  CHECK(v.outcome == Verdict::Outcome::Nonintegrable);
  CHECK(v.fired_condition == "main2.ii");
}

TEST_CASE("verdict names") {
  CHECK(std::string(outcome_name(Verdict::Outcome::Nonintegrable)) == "Nonintegrable");
  CHECK(std::string(outcome_name(Verdict::Outcome::Inconclusive)) == "Inconclusive");
  CHECK(std::string(rationality_status_name(RationalityEvidence::Status::ExactRational)) ==
        "ExactRational");
}
