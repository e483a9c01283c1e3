#pragma once

// Serialization of verification reports and positivity proofs.
//
// Line format, one report per line:
//
//   property_id,status,worst_margin,detail
//
// `worst_margin` is scientific with 6 significant digits; `detail` is quoted
// with RFC 4180 rules when it contains a comma or quote.
//
// JSON documents carry a "schema" field; see README.md for the layout.

#include <string>
#include <vector>

#include <json.hpp>

#include "trigpoly/prover.hpp"
#include "trigpoly/verify.hpp"

namespace trigpoly {

inline constexpr const char* kReportSchema = "trigpoly.verify/1";
inline constexpr const char* kProofSchema = "trigpoly.proof/1";

std::string report_line(const PropertyReport& report);
nlohmann::json report_json(const PropertyReport& report);
nlohmann::json suite_json(const std::vector<PropertyReport>& reports);

/// Full audit record: interval coefficients, every tile and its lower bound.
nlohmann::json proof_json(const ExampleProof& example, int significant = 40);

}  // namespace trigpoly
