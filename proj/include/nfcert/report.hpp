#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nfcert/criteria.hpp"
#include "nfcert/families.hpp"
#include "nfcert/linalg.hpp"
#include "nfcert/normalform.hpp"
#include "nfcert/oracle.hpp"
#include "nfcert/planar.hpp"
#include "nfcert/resonance.hpp"
#include "nfcert/spectral.hpp"

namespace nfcert {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kReportSchema = "nfcert-report/1";

// 64-bit FNV-1a over raw bytes; hex form is prefixed "fnv1a64:".
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);

// JSON fragments for the analysis report.  Plain nlohmann::json objects sort
// keys lexicographically, which keeps serialized reports byte-stable.
nlohmann::json spectral_json(const DMatrix& a, const CaseClassification& cls);
nlohmann::json classification_json(const CaseClassification& cls);
nlohmann::json fold_hopf_json(const FoldHopfCoeffs& c);
nlohmann::json double_hopf_json(const DoubleHopfCoeffs& c);
nlohmann::json rationality_json(const RationalityEvidence& e);
nlohmann::json verdict_json(const Verdict& v);
nlohmann::json resonance_json(const ResonanceData& r);
nlohmann::json nullspace_json(const NullspaceResult& r,
                              const std::vector<std::string>& vars);
nlohmann::json obstruction_json(const ObstructionReport& r);
nlohmann::json quadext_json(const QuadExt& q);
nlohmann::json rossler_sidecar_json(const RosslerClosedForm& cf);
nlohmann::json vdp_sidecar_json(const VdpParams& p, const VdpClosedForm& cf);

// The fixed evaluation conventions a reader needs to reproduce the numbers.
nlohmann::json conventions_json();

}  // namespace nfcert
