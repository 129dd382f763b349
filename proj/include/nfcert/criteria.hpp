#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nfcert/normalform.hpp"
#include "nfcert/rational.hpp"

namespace nfcert {

struct RationalityEvidence {
  enum class Status { Rational, LikelyIrrational, ExactRational };
  Status status = Status::LikelyIrrational;
  double value = 0.0;
  BigInt p{0};       // matched fraction, or the best convergent found
  BigInt q{1};
  double residual = 0.0;
  long long qmax = 0;
  double tol = 0.0;
};

struct Hypothesis {
  std::string name;
  double value = 0.0;
  bool pass = false;
};

struct Verdict {
  enum class Outcome { Nonintegrable, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::string fired_condition;  // "main1.i", "main1.ii", "main2.i/ii/iii"
  std::vector<Hypothesis> hypotheses;
  std::optional<RationalityEvidence> rationality;  // for the ratio conditions
  std::optional<RationalityEvidence> freq_ratio;   // double-Hopf omega1/omega2
  std::vector<std::string> caveats;
};

struct CriteriaConfig {
  long long qmax = 1000000;
  double rat_tol = 1e-12;
  double zero_tol_base = 1e-10;
  // Closed-form ratio (alpha4/alpha1 resp. alpha2/alpha4) supplied by the
  // built-in family generators when the input coefficients were exact.
  std::optional<Rational> exact_ratio;
};

// Continued-fraction test: first convergent with q <= qmax and
// |x - p/q| <= tol wins; otherwise LikelyIrrational with the best convergent.
RationalityEvidence rationality_check(double x, long long qmax, double tol);

// Evidence for a value known exactly as a fraction.
RationalityEvidence rationality_exact(const Rational& r);

Verdict evaluate_fold_hopf(const FoldHopfCoeffs& c, const CriteriaConfig& cfg);
Verdict evaluate_double_hopf(const DoubleHopfCoeffs& c, const CriteriaConfig& cfg);

const char* outcome_name(Verdict::Outcome o);
const char* rationality_status_name(RationalityEvidence::Status s);

}  // namespace nfcert
