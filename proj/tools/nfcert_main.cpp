#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nfcert/families.hpp"
#include "nfcert/normalform.hpp"
#include "nfcert/oracle.hpp"
#include "nfcert/pipeline.hpp"
#include "nfcert/planar.hpp"
#include "nfcert/report.hpp"
#include "nfcert/spectral.hpp"
#include "nfcert/vectorfield.hpp"

namespace {

using nfcert::Error;
using nfcert::ErrorCode;
using nlohmann::json;

// A fraction or integer literal states an exact model parameter; a decimal
// or scientific literal is taken as a floating approximation.
bool exact_literal(const std::string& s) {
  return s.find('.') == std::string::npos &&
         s.find('e') == std::string::npos && s.find('E') == std::string::npos;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<double> parse_point(const std::string& s, int dim,
                                const char* what) {
  auto parts = split_commas(s);
  if (static_cast<int>(parts.size()) != dim)
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " needs " + std::to_string(dim) +
                    " comma-separated values (got " +
                    std::to_string(parts.size()) + ")");
  std::vector<double> x;
  for (const auto& p : parts)
    x.push_back(nfcert::to_double(nfcert::rational_from_string(p)));
  return x;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Built-in families

struct BuiltInput {
  nfcert::FieldData fd;
  json spec;  // ingestion-format JSON, including a metadata block
  json sidecar;
  std::optional<nfcert::Rational> exact_ratio;
};

BuiltInput build_rossler(const std::string& lit) {
  BuiltInput out;
  json meta{{"family", "rossler"}, {"parameters", {{"a", lit}}}};
  if (exact_literal(lit)) {
    nfcert::Rational a = nfcert::rational_from_string(lit);
    out.fd = nfcert::rossler_field(a);
    auto cf = nfcert::rossler_closed_form(a);
    out.exact_ratio = cf.exact_ratio;
    if (cf.exact_ratio)
      meta["exact_ratio"] = nfcert::to_string(*cf.exact_ratio);
    out.sidecar = nfcert::rossler_sidecar_json(cf);
    out.spec = nfcert::field_to_json(*out.fd.exact);
  } else {
    double a = nfcert::to_double(nfcert::rational_from_string(lit));
    out.fd = nfcert::rossler_field_numeric(a);
    out.sidecar = nfcert::rossler_sidecar_json(nfcert::rossler_closed_form(a));
    out.spec = nfcert::field_to_json(out.fd.field);
  }
  out.spec["metadata"] = meta;
  return out;
}

BuiltInput build_vdp(const std::string& c, const std::string& b1,
                     const std::string& b2, const std::string& a1,
                     const std::string& a2) {
  BuiltInput out;
  const bool exact = exact_literal(c) && exact_literal(b1) &&
                     exact_literal(b2) && exact_literal(a1) &&
                     exact_literal(a2);
  nfcert::VdpParams p{nfcert::rational_from_string(c),
                      nfcert::rational_from_string(b1),
                      nfcert::rational_from_string(b2),
                      nfcert::rational_from_string(a1),
                      nfcert::rational_from_string(a2)};
  out.fd = nfcert::vdp_field(p);
  auto cf = nfcert::vdp_closed_form(p);
  json meta{{"family", "vdp"},
            {"parameters",
             {{"c", c}, {"b1", b1}, {"b2", b2}, {"a1", a1}, {"a2", a2}}}};
  if (exact) {
    out.exact_ratio = cf.exact_ratio;
    if (cf.exact_ratio)
      meta["exact_ratio"] = nfcert::to_string(*cf.exact_ratio);
    out.spec = nfcert::field_to_json(*out.fd.exact);
  } else {
    out.fd.exact.reset();
    out.spec = nfcert::field_to_json(out.fd.field);
  }
  out.sidecar = nfcert::vdp_sidecar_json(p, cf);
  out.spec["metadata"] = meta;
  return out;
}

// ---------------------------------------------------------------------------
// Option bag shared by the subcommands

struct Opts {
  std::string spec_path;
  std::string family;
  std::string a = "";  // rossler parameter
  std::string c = "2", b1 = "1/2", b2 = "1/2", a1 = "1", a2 = "1";  // vdp

  int oracle_degree = 0;
  int bound = 4;
  double rtol = 1e-10, atol = 1e-12, guard = 1e3;
  long long qmax = 1000000;
  double rat_tol = 1e-12;
  double zero_tol = 1e-10;
  bool no_planar = false;

  std::string shift;
  bool find_eq = false;
  std::string seed;
  std::string sweep;
  std::string json_out;

  std::string x0;
  double t_end = 10.0;
  bool planar_mode = false;
  bool compare_planar = false;
  std::string csv_out;
  std::string out_path;
};

void add_family_options(CLI::App* sub, Opts& o) {
  sub->add_option("--family", o.family, "built-in family (rossler or vdp)")
      ->check(CLI::IsMember({"rossler", "vdp"}));
  sub->add_option("--a", o.a, "rossler parameter a (fraction = exact)");
  sub->add_option("--c", o.c, "vdp parameter c");
  sub->add_option("--b1", o.b1, "vdp coupling b1");
  sub->add_option("--b2", o.b2, "vdp coupling b2");
  sub->add_option("--a1", o.a1, "vdp damping a1");
  sub->add_option("--a2", o.a2, "vdp damping a2");
}

BuiltInput build_family(const Opts& o) {
  if (o.family == "rossler") {
    if (o.a.empty())
      throw Error(ErrorCode::ParseError, "--family rossler needs --a");
    return build_rossler(o.a);
  }
  if (o.family == "vdp") return build_vdp(o.c, o.b1, o.b2, o.a1, o.a2);
  throw Error(ErrorCode::ParseError, "unknown family '" + o.family + "'");
}

// Loads the field either from a file or from a family; returns the field,
// the echoed input JSON, and any exact coefficient-ratio statement.
void load_input(const Opts& o, nfcert::FieldData& fd, json& echo,
                std::optional<nfcert::Rational>& exact_ratio) {
  if (!o.spec_path.empty() && !o.family.empty())
    throw Error(ErrorCode::ParseError, "give either a field file or --family, not both");
  if (!o.spec_path.empty()) {
    std::ifstream in(o.spec_path);
    if (!in)
      throw Error(ErrorCode::ParseError, "cannot open file: " + o.spec_path);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
    }
    fd = nfcert::parse_field_json(j);
    echo = j;
    if (j.contains("metadata") && j["metadata"].is_object()) {
      const auto& m = j["metadata"];
      if (m.contains("exact_ratio") && m["exact_ratio"].is_string())
        exact_ratio =
            nfcert::rational_from_string(m["exact_ratio"].get<std::string>());
    }
    return;
  }
  if (!o.family.empty()) {
    BuiltInput bi = build_family(o);
    fd = std::move(bi.fd);
    echo = std::move(bi.spec);
    exact_ratio = bi.exact_ratio;
    return;
  }
  throw Error(ErrorCode::ParseError, "give a field JSON file or --family");
}

void emit_json(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write file: " + path);
  out << j.dump(2) << "\n";
}

nfcert::PipelineOptions pipeline_options(const Opts& o,
                                         std::optional<nfcert::Rational> er) {
  nfcert::PipelineOptions po;
  po.criteria.qmax = o.qmax;
  po.criteria.rat_tol = o.rat_tol;
  po.criteria.zero_tol_base = o.zero_tol;
  po.criteria.exact_ratio = std::move(er);
  po.resonance_bound = o.bound;
  po.oracle_degree = o.oracle_degree;
  po.rtol = o.rtol;
  po.atol = o.atol;
  po.planar_checks = !o.no_planar;
  return po;
}

// ---------------------------------------------------------------------------
// analyze

int run_sweep(const Opts& o) {
  // --sweep a=lo:hi:step, rossler only: one summary JSON object per line.
  auto eq = o.sweep.find('=');
  if (eq == std::string::npos || o.sweep.substr(0, eq) != "a")
    throw Error(ErrorCode::ParseError, "--sweep expects a=lo:hi:step");
  auto cols = split_commas(o.sweep.substr(eq + 1));  // no commas expected
  auto spec = cols[0];
  auto c1 = spec.find(':');
  auto c2 = spec.find(':', c1 == std::string::npos ? 0 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw Error(ErrorCode::ParseError, "--sweep expects a=lo:hi:step");
  if (!o.family.empty() && o.family != "rossler")
    throw Error(ErrorCode::ParseError, "--sweep is supported for --family rossler");
  double lo = nfcert::to_double(nfcert::rational_from_string(spec.substr(0, c1)));
  double hi = nfcert::to_double(
      nfcert::rational_from_string(spec.substr(c1 + 1, c2 - c1 - 1)));
  double step = nfcert::to_double(nfcert::rational_from_string(spec.substr(c2 + 1)));
  if (step <= 0 || hi < lo)
    throw Error(ErrorCode::ParseError, "--sweep needs lo <= hi and step > 0");

  std::ofstream file;
  if (!o.json_out.empty()) {
    file.open(o.json_out);
    if (!file)
      throw Error(ErrorCode::ParseError, "cannot write file: " + o.json_out);
  }
  std::ostream& os = o.json_out.empty() ? std::cout : file;

  const int count = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= count; ++i) {
    const double a = lo + i * step;
    json line{{"a", a}};
    try {
      nfcert::FieldData fd = nfcert::rossler_field_numeric(a);
      json echo = nfcert::field_to_json(fd.field);
      echo["metadata"] = {{"family", "rossler"}, {"parameters", {{"a", a}}}};
      auto res =
          nfcert::analyze_field(fd, pipeline_options(o, std::nullopt), echo);
      line["omega"] = res.report["coefficients"]["omega"];
      line["alpha"] = res.report["coefficients"]["alpha"];
      line["outcome"] = res.report["verdict"]["outcome"];
      line["fired_condition"] = res.report["verdict"]["fired_condition"];
      line["caveats"] = res.report["verdict"]["caveats"];
    } catch (const Error& e) {
      line["error"] = {{"code", nfcert::error_code_name(e.code())},
                       {"message", e.what()}};
    }
    os << line.dump() << "\n";
  }
  return 0;
}

int cmd_analyze(const Opts& o) {
  if (!o.sweep.empty()) return run_sweep(o);

  nfcert::FieldData fd;
  json echo;
  std::optional<nfcert::Rational> exact_ratio;
  load_input(o, fd, echo, exact_ratio);

  if (o.find_eq) {
    std::vector<double> seed(fd.field.dim, 0.0);
    if (!o.seed.empty()) seed = parse_point(o.seed, fd.field.dim, "--seed");
    auto xstar = nfcert::newton_find_equilibrium(fd.field, seed);
    // Prefer an exact shift: snap the root to small fractions and keep the
    // snap only if the exact field vanishes there.  Newton alone locates a
    // degenerate equilibrium no better than sqrt(eps), so this recovery step
    // is what makes the subsequent strict classification possible.
    bool shifted = false;
    if (fd.is_exact()) {
      std::vector<nfcert::Rational> xr;
      for (double v : xstar)
        xr.push_back(nfcert::snap_to_rational(v, o.qmax).value);
      auto fx = fd.exact->template evaluate<nfcert::Rational>(xr);
      bool is_eq = true;
      for (const auto& val : fx) is_eq = is_eq && val == 0;
      if (is_eq) {
        bool zero_shift = true;
        std::vector<double> xd;
        for (const auto& r : xr) {
          zero_shift = zero_shift && r == 0;
          xd.push_back(nfcert::to_double(r));
        }
        fd.exact = nfcert::recenter(*fd.exact, xr);
        fd.field = nfcert::to_double_field(*fd.exact);
        if (!zero_shift) exact_ratio.reset();
        echo["recentered_at"] = xd;
        echo["equilibrium_exact"] = true;
        shifted = true;
      }
    }
    if (!shifted) {
      fd.field = nfcert::recenter(fd.field, xstar);
      // The converged root leaves constant terms at rounding level; zero
      // them and record how large they were.
      double eq_resid = 0.0;
      for (auto& p : fd.field.comp) {
        double c0 = p.coeff(nfcert::Mono{});
        eq_resid = std::max(eq_resid, std::abs(c0));
        p.add_term(nfcert::Mono{}, -c0);
      }
      fd.exact.reset();
      exact_ratio.reset();  // statements about the unshifted model no longer apply
      echo["recentered_at"] = xstar;
      echo["equilibrium_residual"] = eq_resid;
    }
  } else if (!o.shift.empty()) {
    auto parts = split_commas(o.shift);
    if (static_cast<int>(parts.size()) != fd.field.dim)
      throw Error(ErrorCode::DimensionMismatch,
                  "--shift needs " + std::to_string(fd.field.dim) + " values");
    bool ex = fd.is_exact();
    for (const auto& p : parts) ex = ex && exact_literal(p);
    std::vector<double> xd;
    if (ex) {
      std::vector<nfcert::Rational> xr;
      for (const auto& p : parts) xr.push_back(nfcert::rational_from_string(p));
      fd.exact = nfcert::recenter(*fd.exact, xr);
      fd.field = nfcert::to_double_field(*fd.exact);
      for (const auto& r : xr) xd.push_back(nfcert::to_double(r));
    } else {
      for (const auto& p : parts)
        xd.push_back(nfcert::to_double(nfcert::rational_from_string(p)));
      fd.field = nfcert::recenter(fd.field, xd);
      fd.exact.reset();
    }
    exact_ratio.reset();
    echo["recentered_at"] = xd;
  }

  auto res = nfcert::analyze_field(fd, pipeline_options(o, exact_ratio), echo);
  emit_json(res.report, o.json_out);
  return res.exit_code;
}

// ---------------------------------------------------------------------------
// example

int cmd_example(const Opts& o) {
  if (o.family.empty())
    throw Error(ErrorCode::ParseError, "example needs --family rossler|vdp");
  BuiltInput bi = build_family(o);
  if (o.out_path.empty()) {
    std::cout << bi.spec.dump(2) << "\n";
    return 0;
  }
  emit_json(bi.spec, o.out_path);
  std::string side = o.out_path;
  const std::string suffix = ".json";
  if (side.size() >= suffix.size() &&
      side.compare(side.size() - suffix.size(), suffix.size(), suffix) == 0)
    side = side.substr(0, side.size() - suffix.size());
  side += ".sidecar.json";
  emit_json(bi.sidecar, side);
  std::cout << json{{"spec_path", o.out_path}, {"sidecar_path", side}}.dump()
            << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

void write_csv(const nfcert::Trajectory& traj,
               const nfcert::FirstIntegral* q, std::ostream& os,
               const std::string& note,
               const std::vector<std::string>& names = {}) {
  const size_t dim = traj.states.empty() ? 0 : traj.states.front().size();
  os << "t";
  for (size_t i = 0; i < dim; ++i) {
    if (i < names.size())
      os << "," << names[i];
    else
      os << ",x" << i + 1;
  }
  if (q) os << ",Q";
  os << "\n";
  double q0 = 0.0, drift = 0.0;
  bool have_q0 = false;
  for (size_t k = 0; k < traj.times.size(); ++k) {
    os << g17(traj.times[k]);
    for (double v : traj.states[k]) os << "," << g17(v);
    if (q) {
      double val = (*q)(traj.states[k][0], traj.states[k][1]);
      os << "," << g17(val);
      if (!have_q0) {
        q0 = val;
        have_q0 = true;
      }
      drift = std::max(drift,
                       std::abs(val - q0) / std::max(std::abs(q0), 1e-12));
    }
    os << "\n";
  }
  const char* reason = traj.reason == nfcert::Termination::TimeReached
                           ? "time_reached"
                           : traj.reason == nfcert::Termination::BlowUpGuard
                                 ? "blow_up_guard"
                                 : "domain_exit";
  os << "# steps = " << traj.steps << ", rejected = " << traj.rejected
     << ", termination = " << reason << "\n";
  if (q) os << "# max_relative_drift = " << g17(drift) << "\n";
  if (!note.empty()) os << "# " << note << "\n";
}

int cmd_simulate(const Opts& o) {
  nfcert::FieldData fd;
  json echo;
  std::optional<nfcert::Rational> er;
  load_input(o, fd, echo, er);
  if (o.x0.empty()) throw Error(ErrorCode::ParseError, "simulate needs --x0");

  nfcert::IntegrateOptions io;
  io.rtol = o.rtol;
  io.atol = o.atol;
  io.guard = o.guard;

  std::ofstream file;
  if (!o.csv_out.empty()) {
    file.open(o.csv_out);
    if (!file)
      throw Error(ErrorCode::ParseError, "cannot write file: " + o.csv_out);
  }
  std::ostream& os = o.csv_out.empty() ? std::cout : file;

  if (o.planar_mode) {
    auto a = nfcert::jacobian_at_origin(fd.field);
    auto pairs = nfcert::eigen_decomposition(a);
    auto cls = nfcert::classify_case(pairs, nfcert::default_classify_tol(a), &a);
    if (cls.kind == nfcert::CaseKind::Unsupported)
      throw Error(ErrorCode::CaseMismatch, cls.reason);
    nfcert::PlanarSystem s =
        cls.kind == nfcert::CaseKind::FoldHopf
            ? nfcert::make_planar(nfcert::fold_hopf_coeffs(fd.field, cls))
            : nfcert::make_planar(nfcert::double_hopf_coeffs(fd.field, cls));
    auto x0 = parse_point(o.x0, 2, "--x0");
    std::optional<nfcert::FirstIntegral> q;
    std::string note;
    try {
      auto fi = nfcert::first_integral(s);
      if (fi.degenerate)
        note = "first integral is constant: " + fi.degenerate_note;
      else
        q = fi;
    } catch (const Error& e) {
      note = std::string("no first integral evaluated: ") + e.what();
    }
    if (q) {
      auto qq = *q;
      io.in_domain = [qq](const std::vector<double>& x) {
        if (!qq.in_domain(x[0], x[1])) return false;
        try {
          return std::isfinite(qq(x[0], x[1]));
        } catch (const Error&) {
          return false;
        }
      };
      if (!io.in_domain(x0))
        throw Error(ErrorCode::DomainError,
                    "--x0 is outside the domain of the first integral");
    }
    auto traj = nfcert::integrate(s.field, x0, o.t_end, io);
    write_csv(traj, q ? &*q : nullptr, os, note,
              s.kind == nfcert::PlanarKind::Case1
                  ? std::vector<std::string>{"r", "x3"}
                  : std::vector<std::string>{"r1", "r2"});
    return 0;
  }

  auto x0 = parse_point(o.x0, fd.field.dim, "--x0");
  if (o.compare_planar) {
    // Full run against the planar reduction of its computed coefficients:
    // radial pair of each, sampled on a shared time grid, side by side.
    auto a = nfcert::jacobian_at_origin(fd.field);
    auto pairs = nfcert::eigen_decomposition(a);
    auto cls = nfcert::classify_case(pairs, nfcert::default_classify_tol(a), &a);
    if (cls.kind == nfcert::CaseKind::Unsupported)
      throw Error(ErrorCode::CaseMismatch, cls.reason);
    const bool fh = cls.kind == nfcert::CaseKind::FoldHopf;
    nfcert::PlanarSystem s =
        fh ? nfcert::make_planar(nfcert::fold_hopf_coeffs(fd.field, cls))
           : nfcert::make_planar(nfcert::double_hopf_coeffs(fd.field, cls));
    // The reduction lives in the adapted chart, so the full trajectory has
    // to be read off through the left eigenvectors; the raw coordinates are
    // not commensurable with the planar radial pair.
    auto mode = [&](const std::vector<double>& x, int idx) {
      nfcert::Complex acc(0, 0);
      const auto& u = cls.pairs[idx].u;
      for (size_t j = 0; j < x.size(); ++j) acc += std::conj(u[j]) * x[j];
      return acc;
    };
    auto radial_pair = [&](const std::vector<double>& x) {
      double a1 = std::abs(mode(x, cls.idx_pos1));
      double a2 = fh ? mode(x, cls.idx_zero).real()
                     : std::abs(mode(x, cls.idx_pos2));
      return std::array<double, 2>{a1, a2};
    };
    std::vector<double> times;
    const int n_samples = 300;
    for (int i = 0; i <= n_samples; ++i)
      times.push_back(o.t_end * i / n_samples);
    auto full = nfcert::integrate_sampled(fd.field, x0, times, io);
    auto p0 = radial_pair(x0);
    auto red = nfcert::integrate_sampled(s.field, {p0[0], p0[1]}, times, io);
    const std::vector<std::string> head =
        fh ? std::vector<std::string>{"r_full", "x3_full", "r_planar",
                                      "x3_planar"}
           : std::vector<std::string>{"r1_full", "r2_full", "r1_planar",
                                      "r2_planar"};
    os << "t";
    for (const auto& h : head) os << "," << h;
    os << "\n";
    size_t n = std::min(full.times.size(), red.times.size());
    double dev = 0.0;
    for (size_t k = 0; k < n; ++k) {
      auto rp = radial_pair(full.states[k]);
      const auto& xr = red.states[k];
      dev = std::max(dev, std::abs(rp[0] - xr[0]) + std::abs(rp[1] - xr[1]));
      os << g17(full.times[k]) << "," << g17(rp[0]) << "," << g17(rp[1]) << ","
         << g17(xr[0]) << "," << g17(xr[1]) << "\n";
    }
    os << "# max_deviation = " << g17(dev) << "\n";
    return 0;
  }
  auto traj = nfcert::integrate(fd.field, x0, o.t_end, io);
  write_csv(traj, nullptr, os, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  CLI::App app{
      "nfcert: certifies nonintegrability of 3D/4D polynomial vector fields "
      "near fold-Hopf / double-Hopf equilibria via normal-form coefficients"};
  app.require_subcommand(1);

  auto* an = app.add_subcommand(
      "analyze", "compute coefficients, evaluate the criteria, emit a report");
  an->add_option("spec", o.spec_path, "field JSON file");
  add_family_options(an, o);
  an->add_option("--oracle", o.oracle_degree,
                 "also run exact polynomial searches up to this degree");
  an->add_option("--bound", o.bound, "resonance generator search bound");
  an->add_option("--rtol", o.rtol, "integration relative tolerance");
  an->add_option("--atol", o.atol, "integration absolute tolerance");
  an->add_option("--qmax", o.qmax, "denominator bound for rationality tests");
  an->add_option("--rat-tol", o.rat_tol, "residual tolerance for rationality");
  an->add_option("--zero-tol", o.zero_tol, "base tolerance for zero tests");
  an->add_flag("--no-planar", o.no_planar, "skip the planar cross-checks");
  an->add_option("--shift", o.shift,
                 "re-center at this point before analysis (comma-separated; "
                 "fractions keep exact coefficients exact)");
  an->add_flag("--find-equilibrium", o.find_eq,
               "Newton-search an equilibrium and re-center there");
  an->add_option("--seed", o.seed, "Newton seed point (default: origin)");
  an->add_option("--sweep", o.sweep,
                 "a=lo:hi:step — rossler parameter sweep, one JSON line each");
  an->add_option("--json", o.json_out, "write the report here instead of stdout");

  auto* ex = app.add_subcommand(
      "example", "emit a family field as ingestion-format JSON");
  add_family_options(ex, o);
  ex->add_option("--out", o.out_path,
                 "write the field here (plus a closed-form sidecar)");

  auto* si = app.add_subcommand("simulate", "integrate a field and emit CSV");
  si->add_option("spec", o.spec_path, "field JSON file");
  add_family_options(si, o);
  si->add_option("--x0", o.x0, "initial state, comma-separated")->required();
  si->add_option("--t-end", o.t_end, "integration time");
  si->add_option("--rtol", o.rtol, "relative tolerance");
  si->add_option("--atol", o.atol, "absolute tolerance");
  si->add_option("--guard", o.guard, "blow-up guard on the state norm");
  si->add_flag("--planar", o.planar_mode,
               "integrate the planar reduction (2D --x0) with its integral");
  si->add_flag("--compare-planar", o.compare_planar,
               "also report the truncated-model reduction deviation");
  si->add_option("--csv", o.csv_out, "write CSV here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (an->parsed()) return cmd_analyze(o);
    if (ex->parsed()) return cmd_example(o);
    if (si->parsed()) return cmd_simulate(o);
  } catch (const Error& e) {
    std::cout << json{{"error",
                       {{"code", nfcert::error_code_name(e.code())},
                        {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}
                     .dump(2)
              << "\n";
    return 1;
  }
  return 1;
}
