#include "nfcert/pipeline.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nfcert/normalform.hpp"
#include "nfcert/oracle.hpp"
#include "nfcert/planar.hpp"
#include "nfcert/report.hpp"
#include "nfcert/resonance.hpp"
#include "nfcert/spectral.hpp"

namespace nfcert {

namespace {

// Pass thresholds for the numerical cross-checks.  These validate the
// computed coefficients against independent integrations; failures surface
// as verdict caveats, never as silently changed outcomes.
constexpr double kProbeDriftTol = 1e-6;
constexpr double kProbeReductionTol = 1e-6;
constexpr double kProbeDriftTime = 5.0;
constexpr double kProbeReductionTime = 3.0;

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

const char* termination_name(Termination t) {
  switch (t) {
    case Termination::TimeReached: return "time_reached";
    case Termination::BlowUpGuard: return "blow_up_guard";
    case Termination::DomainExit: return "domain_exit";
  }
  return "unknown";
}

// Conservation probe on the planar reduction: integrate from a start point
// where Q is defined and measure the relative drift of Q along the way.
nlohmann::json drift_probe(const PlanarSystem& s, const PipelineOptions& opts,
                           Verdict& v) {
  nlohmann::json j;
  FirstIntegral q;
  try {
    q = first_integral(s);
  } catch (const Error& e) {
    j["skipped"] = e.what();
    return j;
  }
  j["degenerate"] = q.degenerate;
  if (q.degenerate) {
    j["note"] = q.degenerate_note;
    return j;
  }

  // Q can be real-valued only on part of the quadrant (negative inner factor
  // with a non-integer exponent); restrict the integration to where it
  // evaluates finitely and scan a few candidate starts.
  auto defined = [q](double x, double y) {
    if (!q.in_domain(x, y)) return false;
    try {
      return std::isfinite(q(x, y));
    } catch (const Error&) {
      return false;
    }
  };
  std::vector<std::array<double, 2>> starts;
  if (s.kind == PlanarKind::Case1)
    starts = {{0.1, -0.05}, {0.1, 0.05}, {0.05, -0.02}};
  else
    starts = {{0.1, 0.1}, {0.02, 0.1}, {0.1, 0.02}, {0.05, 0.2}, {0.2, 0.05}};
  const std::array<double, 2>* x0 = nullptr;
  for (const auto& c : starts)
    if (defined(c[0], c[1])) {
      x0 = &c;
      break;
    }
  if (!x0) {
    j["skipped"] = "no probe start point inside the domain of Q";
    return j;
  }

  IntegrateOptions io;
  io.rtol = opts.rtol;
  io.atol = opts.atol;
  io.in_domain = [defined](const std::vector<double>& x) {
    return defined(x[0], x[1]);
  };
  try {
    Trajectory traj = integrate(s.field, {(*x0)[0], (*x0)[1]},
                                kProbeDriftTime, io);
    double drift = conservation_drift(
        [q](const std::vector<double>& x) { return q(x[0], x[1]); }, traj);
    j["x0"] = {(*x0)[0], (*x0)[1]};
    j["t_end"] = kProbeDriftTime;
    j["samples"] = traj.states.size();
    j["termination"] = termination_name(traj.reason);
    j["drift"] = drift;
    j["tol"] = kProbeDriftTol;
    j["pass"] = drift <= kProbeDriftTol;
    if (drift > kProbeDriftTol)
      v.caveats.push_back("planar conservation probe drift " + fmt_g(drift) +
                          " exceeds " + fmt_g(kProbeDriftTol));
  } catch (const Error& e) {
    j["error"] = e.what();
    v.caveats.push_back(std::string("planar conservation probe failed: ") +
                        e.what());
  }
  return j;
}

nlohmann::json reduction_probe(const std::function<double()>& run, Verdict& v,
                               const std::vector<double>& x0) {
  nlohmann::json j;
  j["x0"] = x0;
  j["t_end"] = kProbeReductionTime;
  j["tol"] = kProbeReductionTol;
  try {
    double dev = run();
    j["max_deviation"] = dev;
    j["pass"] = dev <= kProbeReductionTol;
    if (dev > kProbeReductionTol)
      v.caveats.push_back("planar reduction probe deviation " + fmt_g(dev) +
                          " exceeds " + fmt_g(kProbeReductionTol));
  } catch (const Error& e) {
    j["error"] = e.what();
    v.caveats.push_back(std::string("planar reduction probe failed: ") +
                        e.what());
  }
  return j;
}

nlohmann::json oracle_block(const PlanarSystem& s, const PipelineOptions& opts) {
  nlohmann::json j;
  const int d = opts.oracle_degree;
  j["degree_bound"] = d;
  const bool case1 = s.kind == PlanarKind::Case1;
  const std::vector<std::string> vars =
      case1 ? std::vector<std::string>{"r", "x3"}
            : std::vector<std::string>{"r1", "r2"};

  // The searches are exact, so the floating coefficients are snapped to the
  // nearest small fraction first; the recorded residuals say how faithful
  // that surrogate is to the computed system.
  std::array<Rational, 4> a{};
  nlohmann::json snaps = nlohmann::json::array();
  double worst = 0.0;
  for (int i = 0; i < 4; ++i) {
    if (case1 && i == 1) continue;  // slot alpha2 is not part of the reduction
    SnappedRational sr = snap_to_rational(s.alpha[i], opts.criteria.qmax);
    a[i] = sr.value;
    worst = std::max(worst, sr.residual);
    snaps.push_back({{"slot", "alpha" + std::to_string(i + 1)},
                     {"value", to_string(sr.value)},
                     {"residual", sr.residual}});
  }
  j["snapped_alpha"] = snaps;
  j["max_snap_residual"] = worst;
  j["note"] =
      "results certify the snapped rational system; they rule out polynomial "
      "first integrals only up to the stated degree bound";

  RationalVec p = case1 ? planar_case1_exact(a[0], a[2], a[3])
                        : planar_case2_exact(a[0], a[1], a[2], a[3]);
  try {
    j["first_integrals"] = nullspace_json(polynomial_first_integrals(p, d), vars);
    j["commuting_fields"] =
        nullspace_json(polynomial_commuting_fields(p, d), vars);
  } catch (const Error& e) {
    j["search_error"] = e.what();
  }
  try {
    ObstructionReport ob =
        case1 ? commuter_obstruction_case1({a[0], a[2], a[3]},
                                           std::max(3, std::min(d, 6)))
              : commuter_obstruction_case2(a, std::max(3, std::min(d, 6)));
    j["obstruction"] = obstruction_json(ob);
  } catch (const Error& e) {
    j["obstruction"] = {{"skipped", e.what()}};
  }
  return j;
}

}  // namespace

AnalysisResult analyze_field(const FieldData& fd, const PipelineOptions& opts,
                             const nlohmann::json& input_echo) {
  AnalysisResult out;
  nlohmann::json& rep = out.report;
  rep["schema"] = kReportSchema;
  rep["tool_version"] = kToolVersion;
  rep["input"] = input_echo;
  rep["input_hash"] = fnv1a64_hex(input_echo.dump());

  DMatrix a = jacobian_at_origin(fd.field);
  auto pairs = eigen_decomposition(a);
  CaseClassification cls = classify_case(pairs, default_classify_tol(a), &a);
  if (cls.kind == CaseKind::Unsupported)
    throw Error(ErrorCode::CaseMismatch, cls.reason);
  rep["spectral"] = spectral_json(a, cls);
  rep["classification"] = classification_json(cls);

  Verdict v;
  PlanarSystem planar;
  nlohmann::json planar_block;
  if (cls.kind == CaseKind::FoldHopf) {
    FoldHopfCoeffs c = fold_hopf_coeffs(fd.field, cls);
    rep["coefficients"] = fold_hopf_json(c);
    v = evaluate_fold_hopf(c, opts.criteria);
    planar = make_planar(c);
    rep["resonance"] =
        resonance_json(resonance_set(SymbolicSpectrum::fold_hopf(cls.omega1),
                                     opts.resonance_bound));
    if (opts.planar_checks) {
      planar_block["conservation"] = drift_probe(planar, opts, v);
      std::vector<double> x0{0.1, 0.0, -0.05};
      IntegrateOptions io;
      io.rtol = opts.rtol;
      io.atol = opts.atol;
      planar_block["reduction"] = reduction_probe(
          [&] { return reduction_consistency(c, x0, kProbeReductionTime, io); },
          v, x0);
    }
  } else {
    DoubleHopfCoeffs c = double_hopf_coeffs(fd.field, cls);
    rep["coefficients"] = double_hopf_json(c);
    v = evaluate_double_hopf(c, opts.criteria);
    planar = make_planar(c);
    rep["resonance"] = resonance_json(resonance_set(
        SymbolicSpectrum::double_hopf(cls.omega1, cls.omega2),
        opts.resonance_bound));
    if (opts.planar_checks) {
      planar_block["conservation"] = drift_probe(planar, opts, v);
      std::vector<double> x0{0.1, 0.0, 0.1, 0.0};
      IntegrateOptions io;
      io.rtol = opts.rtol;
      io.atol = opts.atol;
      planar_block["reduction"] = reduction_probe(
          [&] { return reduction_consistency(c, x0, kProbeReductionTime, io); },
          v, x0);
    }
  }

  if (opts.planar_checks) {
    planar_block["system"] = {
        {"kind", planar.kind == PlanarKind::Case1 ? "case1" : "case2"},
        {"alpha", planar.alpha}};
    rep["planar"] = planar_block;
  }
  if (opts.oracle_degree > 0) rep["oracle"] = oracle_block(planar, opts);

  rep["verdict"] = verdict_json(v);
  rep["tolerances"] = {{"rtol", opts.rtol},
                       {"atol", opts.atol},
                       {"qmax", opts.criteria.qmax},
                       {"rat_tol", opts.criteria.rat_tol},
                       {"zero_tol_base", opts.criteria.zero_tol_base},
                       {"classify_tol", cls.classify_tol},
                       {"resonance_bound", opts.resonance_bound},
                       {"probe_drift_tol", kProbeDriftTol},
                       {"probe_reduction_tol", kProbeReductionTol}};
  rep["conventions"] = conventions_json();

  out.verdict = v;
  out.exit_code = v.outcome == Verdict::Outcome::Nonintegrable ? 0 : 2;
  return out;
}

}  // namespace nfcert
