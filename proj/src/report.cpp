#include "nfcert/report.hpp"

#include <cmath>
#include <cstdio>

namespace nfcert {

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

namespace {

nlohmann::json complex_json(const Complex& z) {
  return {{"re", z.real()}, {"im", z.imag()}};
}

const char* kind_name(CaseKind k) {
  switch (k) {
    case CaseKind::FoldHopf: return "fold-hopf";
    case CaseKind::DoubleHopf: return "double-hopf";
    default: return "unsupported";
  }
}

}  // namespace

nlohmann::json spectral_json(const DMatrix& a, const CaseClassification& cls) {
  nlohmann::json ev = nlohmann::json::array();
  double worst_res = 0.0, worst_bi = 0.0;
  for (const auto& p : cls.pairs) {
    double res = eigen_residual(a, p);
    Complex ip{0, 0};
    for (size_t k = 0; k < p.v.size(); ++k) ip += std::conj(p.u[k]) * p.v[k];
    double bi = std::abs(ip - Complex(1, 0));
    worst_res = std::max(worst_res, res);
    worst_bi = std::max(worst_bi, bi);
    ev.push_back({{"lambda", complex_json(p.lambda)},
                  {"residual", res},
                  {"pairing_defect", bi}});
  }
  return {{"eigenvalues", ev},
          {"classify_tol", cls.classify_tol},
          {"max_residual", worst_res},
          {"max_pairing_defect", worst_bi}};
}

nlohmann::json classification_json(const CaseClassification& cls) {
  nlohmann::json j{{"kind", kind_name(cls.kind)}};
  if (cls.kind == CaseKind::FoldHopf) {
    j["omega"] = cls.omega1;
  } else if (cls.kind == CaseKind::DoubleHopf) {
    j["omega1"] = cls.omega1;
    j["omega2"] = cls.omega2;
  } else {
    j["reason"] = cls.reason;
  }
  return j;
}

nlohmann::json fold_hopf_json(const FoldHopfCoeffs& c) {
  return {{"case", "fold-hopf"},
          {"omega", c.omega},
          {"alpha", c.alpha},
          {"kappa01", c.kappa01},
          {"kappa02", c.kappa02},
          {"kappa11", complex_json(c.kappa11)},
          {"imag_residual", c.imag_residual}};
}

nlohmann::json double_hopf_json(const DoubleHopfCoeffs& c) {
  return {{"case", "double-hopf"},
          {"omega1", c.omega1},
          {"omega2", c.omega2},
          {"alpha", c.alpha},
          {"beta", c.beta},
          {"kappa11", complex_json(c.kappa11)},
          {"kappa12", complex_json(c.kappa12)},
          {"kappa21", complex_json(c.kappa21)},
          {"kappa22", complex_json(c.kappa22)}};
}

nlohmann::json rationality_json(const RationalityEvidence& e) {
  const char* st = rationality_status_name(e.status);
  return {{"status", st},
          {"value", e.value},
          {"p", e.p.str()},
          {"q", e.q.str()},
          {"residual", e.residual},
          {"qmax", e.qmax},
          {"tol", e.tol}};
}

nlohmann::json verdict_json(const Verdict& v) {
  nlohmann::json hy = nlohmann::json::array();
  for (const auto& h : v.hypotheses)
    hy.push_back({{"name", h.name}, {"value", h.value}, {"pass", h.pass}});
  nlohmann::json j{{"outcome", outcome_name(v.outcome)},
                   {"fired_condition", v.fired_condition},
                   {"hypotheses", hy},
                   {"caveats", v.caveats}};
  if (v.rationality) j["rationality"] = rationality_json(*v.rationality);
  if (v.freq_ratio) j["freq_ratio"] = rationality_json(*v.freq_ratio);
  return j;
}

nlohmann::json resonance_json(const ResonanceData& r) {
  return {{"bound", r.bound},
          {"degree", r.degree},
          {"generators", r.generators}};
}

nlohmann::json nullspace_json(const NullspaceResult& r,
                              const std::vector<std::string>& vars) {
  nlohmann::json j{{"degree_bound", r.degree_bound}};
  if (!r.integrals.empty() || r.quotient_dim < 0) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& f : r.integrals) basis.push_back(f.str(vars));
    j["basis"] = basis;
    j["count"] = r.integrals.size();
  }
  if (r.quotient_dim >= 0) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& q : r.fields) {
      nlohmann::json comps = nlohmann::json::array();
      for (const auto& c : q.comp) comps.push_back(c.str(vars));
      basis.push_back(comps);
    }
    j["basis"] = basis;
    j["count"] = r.fields.size();
    j["quotient_dim"] = r.quotient_dim;
  }
  j["quotient_note"] = r.quotient_note;
  return j;
}

nlohmann::json obstruction_json(const ObstructionReport& r) {
  std::vector<std::string> vars =
      r.kind == PlanarKind::Case1 ? std::vector<std::string>{"r", "x3"}
                                  : std::vector<std::string>{"r1", "r2"};
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& a : r.alpha) alpha.push_back(to_string(a));
  nlohmann::json j{
      {"case", r.kind == PlanarKind::Case1 ? 1 : 2},
      {"alpha", alpha},
      {"delta", r.delta.str(vars)},
      {"generic", r.generic},
      {"obstruction_holds", r.obstruction_holds},
      {"euler_factor", to_string(r.euler_factor)},
      {"bracket_factor", to_string(r.bracket_factor)},
      {"higher_kernel_dims", r.higher_kernel_dims},
      {"notes", r.notes}};
  if (r.q_leading) {
    j["q_leading"] = {r.q_leading->comp[0].str(vars),
                      r.q_leading->comp[1].str(vars)};
    j["bracket_leading"] = {r.bracket_leading.comp[0].str(vars),
                            r.bracket_leading.comp[1].str(vars)};
  }
  if (r.witness) {
    j["witness"] = {r.witness->comp[0].str(vars), r.witness->comp[1].str(vars)};
    j["witness_c"] = to_string(r.witness_c);
  }
  return j;
}

nlohmann::json quadext_json(const QuadExt& q) {
  return {{"rational_part", to_string(q.a)},
          {"radical_coefficient", to_string(q.b)},
          {"radicand", to_string(q.d)},
          {"text", q.str()},
          {"value", q.value()}};
}

nlohmann::json rossler_sidecar_json(const RosslerClosedForm& cf) {
  nlohmann::json j{{"family", "rossler"},
                   {"a", cf.a},
                   {"omega", cf.omega},
                   {"alpha", cf.alpha}};
  if (cf.exact) {
    j["exact"] = {{"omega_sq", to_string(cf.omega_sq)},
                  {"alpha1_times_omega_sq", to_string(cf.alpha1_times_wsq)},
                  {"alpha2_times_omega", to_string(cf.alpha2_times_w)},
                  {"alpha3_times_omega_sq", to_string(cf.alpha3_times_wsq)},
                  {"alpha4_times_omega_sq", to_string(cf.alpha4_times_wsq)}};
    if (cf.exact_ratio)
      j["exact"]["alpha4_over_alpha1"] = to_string(*cf.exact_ratio);
  }
  return j;
}

nlohmann::json vdp_sidecar_json(const VdpParams& p, const VdpClosedForm& cf) {
  nlohmann::json j{{"family", "vdp"},
                   {"parameters",
                    {{"c", to_string(p.c)},
                     {"b1", to_string(p.b1)},
                     {"b2", to_string(p.b2)},
                     {"a1", to_string(p.a1)},
                     {"a2", to_string(p.a2)}}},
                   {"omega1", cf.omega1},
                   {"omega2", cf.omega2},
                   {"omega1_sq", quadext_json(cf.omega1_sq)},
                   {"omega2_sq", quadext_json(cf.omega2_sq)},
                   {"alpha", cf.alpha},
                   {"beta", {0.0, 0.0, 0.0, 0.0}}};
  nlohmann::json ae = nlohmann::json::array();
  for (const auto& a : cf.alpha_exact) ae.push_back(quadext_json(a));
  j["alpha_exact"] = ae;
  if (cf.exact_ratio) j["alpha2_over_alpha4"] = to_string(*cf.exact_ratio);
  return j;
}

nlohmann::json conventions_json() {
  return {
      {"inner_product", "conjugate-linear in the first argument"},
      {"eigenvector_scale",
       "right eigenvectors scaled so the last nonvanishing component is 1; "
       "left eigenvectors scaled so <u,v> = 1"},
      {"multilinear_forms",
       "B and C are the symmetric multilinear forms of the degree-2 and "
       "degree-3 Taylor terms (factorial-weighted coefficients)"},
      {"planar_domain", "r > 0 (respectively r1, r2 > 0)"},
      {"oracle_scope",
       "exact searches cover polynomial first integrals and polynomial "
       "commuting fields up to the stated degree bound only; they do not "
       "decide the analytic question by themselves"}};
}

}  // namespace nfcert
