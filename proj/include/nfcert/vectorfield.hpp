#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nfcert/polynomial.hpp"

namespace nfcert {

// A loaded vector field.  The double view always exists; the exact view is
// present iff every input coefficient was an exact fraction.
struct FieldData {
  PolyVec<double> field;
  std::optional<RationalVec> exact;

  bool is_exact() const { return exact.has_value(); }
};

inline constexpr int kDefaultMaxDegree = 12;

// Ingestion contract: {"dim": n, "terms": [{"component": 1-based,
// "exponents": [per-variable], "coeff": {"num": p, "den": q} | number}]}.
FieldData parse_field_json(const nlohmann::json& j,
                           int max_degree = kDefaultMaxDegree);

FieldData load_field_file(const std::string& path,
                          int max_degree = kDefaultMaxDegree);

nlohmann::json field_to_json(const RationalVec& f);
nlohmann::json field_to_json(const PolyVec<double>& f);

template <class K>
std::vector<std::vector<K>> jacobian_at_origin(const PolyVec<K>& f) {
  for (const auto& p : f.comp)
    if (!detail::scalar_is_zero(p.coeff(Mono{})))
      throw Error(ErrorCode::NotAnEquilibrium,
                  "field has a nonzero constant term; the origin is not an "
                  "equilibrium");
  std::vector<std::vector<K>> a(f.dim, std::vector<K>(f.dim, K(0)));
  for (int j = 0; j < f.dim; ++j)
    for (int l = 0; l < f.dim; ++l) a[j][l] = f.comp[j].coeff(unit_mono(l));
  return a;
}

// Jacobian matrix evaluated at an arbitrary point (used by Newton search).
std::vector<std::vector<double>> jacobian_at(const PolyVec<double>& f,
                                             const std::vector<double>& x);

// Re-centers the field at x0: returns g(y) = f(y + x0).
template <class K>
PolyVec<K> recenter(const PolyVec<K>& f, const std::vector<K>& x0) {
  if (static_cast<int>(x0.size()) != f.dim)
    throw Error(ErrorCode::DimensionMismatch, "shift vector has wrong dimension");
  PolyVec<K> g(f.dim);
  for (int j = 0; j < f.dim; ++j) g.comp[j] = f.comp[j].shifted(x0);
  return g;
}

// Newton iteration for a zero of f from a seed point.
std::vector<double> newton_find_equilibrium(const PolyVec<double>& f,
                                            std::vector<double> x,
                                            double tol = 1e-13,
                                            int max_iter = 60);

}  // namespace nfcert
