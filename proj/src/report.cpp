#include "trigpoly/report.hpp"

#include <string>

namespace trigpoly {

namespace {

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string detail_of(const PropertyReport& report) {
  std::string detail = "worst at " + report.worst_case.input;
  for (const auto& [key, value] : report.metadata) detail += "; " + key + "=" + value;
  return detail;
}

nlohmann::json interval_json(const IntervalValue& x, int significant) {
  return {x.lo().sci(significant, MPFR_RNDD), x.hi().sci(significant, MPFR_RNDU)};
}

}  // namespace

std::string report_line(const PropertyReport& report) {
  return report.property_id + "," + to_string(report.status) + "," + report.worst_case.margin.sci(6) + "," +
         csv_field(detail_of(report));
}

nlohmann::json report_json(const PropertyReport& report) {
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : report.metadata) meta[key] = value;
  return {
      {"property_id", report.property_id},
      {"status", to_string(report.status)},
      {"worst_case", {{"input", report.worst_case.input}, {"margin", report.worst_case.margin.sci(17)}}},
      {"metadata", meta},
  };
}

nlohmann::json suite_json(const std::vector<PropertyReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  bool all = true;
  for (const auto& r : reports) {
    list.push_back(report_json(r));
    all = all && r.passed();
  }
  return {{"schema", kReportSchema}, {"all_passed", all}, {"reports", list}};
}

nlohmann::json proof_json(const ExampleProof& example, int significant) {
  const PositivityProof& proof = example.proof;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : proof.target) coeffs.push_back(interval_json(c, significant));
  nlohmann::json envelope = nlohmann::json::array();
  for (const auto& c : example.envelope) envelope.push_back(interval_json(c, significant));
  nlohmann::json tiles = nlohmann::json::array();
  for (const auto& t : proof.subintervals) {
    tiles.push_back({{"x", interval_json(t.x, significant)},
                     {"lower_bound", t.lower_bound.sci(significant, MPFR_RNDD)},
                     {"depth", t.depth}});
  }
  nlohmann::json out = {
      {"schema", kProofSchema},
      {"status", to_string(proof.status)},
      {"domain", interval_json(proof.domain, significant)},
      {"shift", example.shift},
      {"envelope_nonnegative_on_unit_interval", example.envelope_nonnegative},
      {"envelope_coefficients", envelope},
      {"target_coefficients", coeffs},
      {"max_depth_used", proof.max_depth_used},
      {"subintervals", tiles},
  };
  if (proof.unresolved) out["unresolved"] = interval_json(*proof.unresolved, significant);
  return out;
}

}  // namespace trigpoly
