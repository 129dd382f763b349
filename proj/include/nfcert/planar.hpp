#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "nfcert/normalform.hpp"
#include "nfcert/polynomial.hpp"

namespace nfcert {

enum class PlanarKind { Case1, Case2 };

// Case1: (r, x3)   with  r' = a1 r x3,           x3' = a3 r^2 + a4 x3^2
// Case2: (r1, r2)  with  r1' = (a1 r1^2 + a2 r2^2) r1, r2' = (a3 r1^2 + a4 r2^2) r2
// alpha slots are (a1, a2, a3, a4); Case1 ignores slot a2.
struct PlanarSystem {
  PlanarKind kind = PlanarKind::Case1;
  std::array<double, 4> alpha{0, 0, 0, 0};
  PolyVec<double> field{2};
};

PlanarSystem make_planar(const FoldHopfCoeffs& c);
PlanarSystem make_planar(const DoubleHopfCoeffs& c);
PlanarSystem make_planar_case1(double a1, double a3, double a4);
PlanarSystem make_planar_case2(double a1, double a2, double a3, double a4);

// Exact-coefficient planar fields for the brute-force searches.
RationalVec planar_case1_exact(const Rational& a1, const Rational& a3,
                               const Rational& a4);
RationalVec planar_case2_exact(const Rational& a1, const Rational& a2,
                               const Rational& a3, const Rational& a4);

// Non-analytic closed-form first integral evaluator.  Degenerate parameter
// sets are flagged (constant Q) instead of producing NaN; evaluation off the
// open quadrant r > 0 (r1, r2 > 0) raises DomainError.
struct FirstIntegral {
  PlanarKind kind = PlanarKind::Case1;
  std::array<double, 4> alpha{0, 0, 0, 0};
  bool degenerate = false;       // Q is constant on its domain
  std::string degenerate_note;

  double operator()(double x, double y) const;
  bool in_domain(double x, double y) const;
};

FirstIntegral first_integral(const PlanarSystem& s);
double first_integral_case1(const std::array<double, 3>& a /*a1,a3,a4*/,
                            double r, double x3);
double first_integral_case2(const std::array<double, 4>& a, double r1, double r2);

enum class Termination { TimeReached, BlowUpGuard, DomainExit, };

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  long long steps = 0;
  long long rejected = 0;
  double rtol = 0.0, atol = 0.0;
  Termination reason = Termination::TimeReached;
};

struct IntegrateOptions {
  double rtol = 1e-10;
  double atol = 1e-12;
  double guard = 1e3;  // blow-up guard on the state norm
  double h0 = 0.0;     // 0 = automatic
  bool fixed_step = false;
  double fixed_h = 0.0;
  std::function<bool(const std::vector<double>&)> in_domain;  // empty = all
};

// Embedded Runge-Kutta 5(4) pair with proportional-integral step control
// (safety 0.9, step-ratio clamp [0.2, 5]).
Trajectory integrate(const PolyVec<double>& f, const std::vector<double>& x0,
                     double t_end, const IntegrateOptions& opts = {});

// States exactly at the requested times (piecewise adaptive integration).
Trajectory integrate_sampled(const PolyVec<double>& f,
                             const std::vector<double>& x0,
                             const std::vector<double>& times,
                             const IntegrateOptions& opts = {});

// max over samples of |Q(x(t)) - Q(x(0))| / max(|Q(x(0))|, floor)
double conservation_drift(const std::function<double(const std::vector<double>&)>& q,
                          const Trajectory& traj, double floor_value = 1e-12);

// Truncated normal forms in the original real coordinates.
PolyVec<double> fold_hopf_truncated(const std::array<double, 4>& alpha,
                                    double omega);
PolyVec<double> double_hopf_truncated(const std::array<double, 4>& alpha,
                                      const std::array<double, 4>& beta,
                                      double omega1, double omega2);

// Integrates the full truncated normal form against its planar reduction
// from matched initial data; returns the max deviation of the radial pair.
double reduction_consistency(const FoldHopfCoeffs& c,
                             const std::vector<double>& x0_3d, double t_end,
                             const IntegrateOptions& opts = {});
double reduction_consistency(const DoubleHopfCoeffs& c,
                             const std::vector<double>& x0_4d, double t_end,
                             const IntegrateOptions& opts = {});

struct CommuterRelationReport {
  bool holds = false;
  double max_parallel_residual = 0.0;  // det(p,q)*DQ against (q2, -q1)
  double max_factor_variation = 0.0;   // scalar factor along a Q level
  std::vector<std::string> notes;
};

// Checks det(p,q) * DQ = chi(Q) * (q2, -q1) on samples, with the explicit
// preconditions DQ.p = 0 and DQ.q = 0 (PreconditionFailed identifies the
// violated one and the sample).
CommuterRelationReport check_integral_commuter_relation(
    const PolyVec<double>& p, const PolyVec<double>& q,
    const std::function<double(double, double)>& q_integral,
    const std::vector<std::array<double, 2>>& samples, double tol = 1e-5);

}  // namespace nfcert
