#pragma once

#include <json.hpp>

#include "nfcert/criteria.hpp"
#include "nfcert/vectorfield.hpp"

namespace nfcert {

struct PipelineOptions {
  CriteriaConfig criteria;
  int resonance_bound = 4;
  int oracle_degree = 0;  // 0 = skip the exact polynomial searches
  double rtol = 1e-10;
  double atol = 1e-12;
  bool planar_checks = true;
};

struct AnalysisResult {
  nlohmann::json report;
  Verdict verdict;
  int exit_code = 2;  // 0 = certified nonintegrable, 2 = inconclusive
};

// Full analysis of a loaded field: spectrum, case classification, normal-form
// coefficients, criteria evaluation, resonance lattice, numerical
// cross-checks on the planar reduction, and (optionally) the exact
// polynomial searches on the snapped planar system.  `input_echo` is stored
// verbatim in the report together with its content hash.
AnalysisResult analyze_field(const FieldData& fd, const PipelineOptions& opts,
                             const nlohmann::json& input_echo);

}  // namespace nfcert
