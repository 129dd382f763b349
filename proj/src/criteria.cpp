#include "nfcert/criteria.hpp"

#include <cmath>
#include <cstdio>

namespace nfcert {

namespace {

int sign_with_tol(double x, double tol) {
  if (x > tol) return 1;
  if (x < -tol) return -1;
  return 0;
}

double ratio_as_double(const RationalityEvidence& e) { return e.value; }

RationalityEvidence ratio_evidence(double ratio, const CriteriaConfig& cfg) {
  if (cfg.exact_ratio.has_value()) {
    RationalityEvidence e = rationality_exact(*cfg.exact_ratio);
    e.qmax = cfg.qmax;
    e.tol = cfg.rat_tol;
    return e;
  }
  return rationality_check(ratio, cfg.qmax, cfg.rat_tol);
}

std::string fraction_text(const RationalityEvidence& e) {
  return e.p.str() + "/" + e.q.str();
}

std::string sci(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

}  // namespace

RationalityEvidence rationality_check(double x, long long qmax, double tol) {
  if (!std::isfinite(x))
    throw Error(ErrorCode::DomainError, "rationality check needs a finite value");
  RationalityEvidence out;
  out.value = x;
  out.qmax = qmax;
  out.tol = tol;

  BigInt p_prev(1), q_prev(0);
  BigInt p_cur, q_cur;
  double xk = x;
  for (int it = 0; it < 64; ++it) {
    double a_floor = std::floor(xk);
    BigInt ak(a_floor);  // exact for integral doubles
    if (it == 0) {
      p_cur = ak;
      q_cur = BigInt(1);
    } else {
      BigInt p_next = ak * p_cur + p_prev;
      BigInt q_next = ak * q_cur + q_prev;
      p_prev = p_cur; q_prev = q_cur;
      p_cur = p_next; q_cur = q_next;
    }
    if (q_cur > qmax) break;
    double approx = to_double(Rational(p_cur, q_cur));
    double res = std::abs(x - approx);
    out.p = p_cur;
    out.q = q_cur;
    out.residual = res;
    if (res <= tol) {
      out.status = RationalityEvidence::Status::Rational;
      return out;
    }
    double frac = xk - a_floor;
    if (frac <= 1e-16 * std::max(1.0, std::abs(xk))) break;  // terminated CF
    xk = 1.0 / frac;
    if (!std::isfinite(xk)) break;
  }
  out.status = RationalityEvidence::Status::LikelyIrrational;
  return out;
}

RationalityEvidence rationality_exact(const Rational& r) {
  RationalityEvidence out;
  out.status = RationalityEvidence::Status::ExactRational;
  out.value = to_double(r);
  out.p = num(r);
  out.q = den(r);
  out.residual = 0.0;
  return out;
}

Verdict evaluate_fold_hopf(const FoldHopfCoeffs& c, const CriteriaConfig& cfg) {
  Verdict v;
  const auto& a = c.alpha;
  double scale = std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2]),
                           std::abs(a[3])});
  double zt = cfg.zero_tol_base * (1.0 + scale);

  int s1 = sign_with_tol(a[0], zt);
  int s4 = sign_with_tol(a[3], zt);
  v.hypotheses.push_back({"alpha1_nonzero", a[0], s1 != 0});

  if (s1 == 0) {
    v.outcome = Verdict::Outcome::Inconclusive;
    v.caveats.push_back("gating hypothesis alpha1 != 0 fails");
    if (a[0] != 0.0)
      v.caveats.push_back("sign ambiguous at tolerance (|alpha1| <= zero_tol)");
    return v;
  }

  double product = a[0] * a[3];
  v.hypotheses.push_back({"alpha1_alpha4_positive", product, s1 * s4 > 0});
  if (s1 * s4 > 0) {
    v.outcome = Verdict::Outcome::Nonintegrable;
    v.fired_condition = "main1.i";
    return v;
  }
  if (s4 == 0) {
    v.outcome = Verdict::Outcome::Inconclusive;
    v.caveats.push_back("alpha1*alpha4 vanishes at tolerance; neither sign condition applies");
    if (a[3] != 0.0)
      v.caveats.push_back("sign ambiguous at tolerance (|alpha4| <= zero_tol)");
    return v;
  }

  // alpha1*alpha4 < 0: the ratio condition decides.
  double ratio = a[3] / a[0];
  RationalityEvidence e = ratio_evidence(ratio, cfg);
  v.rationality = e;
  bool irr = e.status == RationalityEvidence::Status::LikelyIrrational;
  v.hypotheses.push_back(
      {"alpha4_over_alpha1_irrational", ratio_as_double(e), irr});
  if (irr) {
    v.outcome = Verdict::Outcome::Nonintegrable;
    v.fired_condition = "main1.ii";
    v.caveats.push_back(
        "conditional on irrationality of alpha4/alpha1: no fraction with "
        "denominator <= " + std::to_string(e.qmax) + " lies within " + sci(e.tol));
    return v;
  }
  v.outcome = Verdict::Outcome::Inconclusive;
  v.caveats.push_back("alpha4/alpha1 matched the fraction " + fraction_text(e));
  return v;
}

Verdict evaluate_double_hopf(const DoubleHopfCoeffs& c, const CriteriaConfig& cfg) {
  Verdict v;
  const auto& a = c.alpha;
  double scale = std::max({std::abs(a[0]), std::abs(a[1]), std::abs(a[2]),
                           std::abs(a[3])});
  double zt = cfg.zero_tol_base * (1.0 + scale);
  double zt2 = cfg.zero_tol_base * (1.0 + scale * scale);

  // Case (II) requires an irrational frequency ratio; re-checked and attached.
  if (c.omega2 != 0.0) {
    RationalityEvidence fe =
        rationality_check(c.omega1 / c.omega2, cfg.qmax, cfg.rat_tol);
    v.freq_ratio = fe;
    if (fe.status == RationalityEvidence::Status::LikelyIrrational) {
      v.caveats.push_back(
          "frequency ratio omega1/omega2 treated as irrational (no denominator <= " +
          std::to_string(fe.qmax) + " matches within tolerance)");
    } else {
      v.caveats.push_back(
          "warning: omega1/omega2 matched the fraction " + fraction_text(fe) +
          " within tolerance; the case hypotheses require an irrational ratio");
    }
  }

  double gate = a[0] - a[2];
  bool gate_ok = std::abs(gate) > zt;
  v.hypotheses.push_back({"alpha1_ne_alpha3", gate, gate_ok});
  if (!gate_ok) {
    v.outcome = Verdict::Outcome::Inconclusive;
    v.caveats.push_back("gating hypothesis alpha1 != alpha3 fails");
    if (gate != 0.0)
      v.caveats.push_back("sign ambiguous at tolerance (|alpha1-alpha3| <= zero_tol)");
    return v;
  }

  int s2 = sign_with_tol(a[1], zt);
  int s4 = sign_with_tol(a[3], zt);
  double product = a[1] * a[3];
  v.hypotheses.push_back({"alpha2_alpha4_positive", product, s2 * s4 > 0});
  if (s2 * s4 > 0) {
    v.outcome = Verdict::Outcome::Nonintegrable;
    v.fired_condition = "main2.ii";
    return v;
  }

  if (s2 * s4 < 0) {
    double ratio = a[1] / a[3];
    RationalityEvidence e = ratio_evidence(ratio, cfg);
    v.rationality = e;
    bool irr = e.status == RationalityEvidence::Status::LikelyIrrational;
    v.hypotheses.push_back(
        {"alpha2_over_alpha4_irrational", ratio_as_double(e), irr});
    if (irr) {
      v.outcome = Verdict::Outcome::Nonintegrable;
      v.fired_condition = "main2.iii";
      v.caveats.push_back(
          "conditional on irrationality of alpha2/alpha4: no fraction with "
          "denominator <= " + std::to_string(e.qmax) + " lies within " + sci(e.tol));
      return v;
    }
    v.caveats.push_back("alpha2/alpha4 matched the fraction " + fraction_text(e));
  } else if (s2 == 0 || s4 == 0) {
    v.caveats.push_back(
        "alpha2*alpha4 vanishes at tolerance; the sign conditions do not apply");
  }

  double det = a[1] * a[2] - a[0] * a[3];
  bool det_ok = std::abs(det) > zt2;
  v.hypotheses.push_back(
      {"alpha2_alpha3_minus_alpha1_alpha4_nonzero", det, det_ok});
  if (det_ok) {
    v.outcome = Verdict::Outcome::Nonintegrable;
    v.fired_condition = "main2.i";
    return v;
  }
  v.outcome = Verdict::Outcome::Inconclusive;
  if (det != 0.0 && std::abs(det) <= zt2)
    v.caveats.push_back("sign ambiguous at tolerance (|alpha2*alpha3-alpha1*alpha4| <= zero_tol)");
  return v;
}

const char* outcome_name(Verdict::Outcome o) {
  return o == Verdict::Outcome::Nonintegrable ? "Nonintegrable" : "Inconclusive";
}

const char* rationality_status_name(RationalityEvidence::Status s) {
  switch (s) {
    case RationalityEvidence::Status::Rational: return "Rational";
    case RationalityEvidence::Status::LikelyIrrational: return "LikelyIrrational";
    case RationalityEvidence::Status::ExactRational: return "ExactRational";
  }
  return "?";
}

}  // namespace nfcert
