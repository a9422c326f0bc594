#ifndef PWC_REPORT_HPP
#define PWC_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "pwc/closing.hpp"
#include "pwc/verify.hpp"

namespace pwc {

/// Verification attachments for a report: one verdict per candidate plus the
/// brute-force fixed-point scan summary.
struct VerificationBundle {
    std::vector<VerificationVerdict> candidate_verdicts;
    std::vector<double> annulus_samples;
    std::vector<double> annulus_closure_errors;
    std::optional<FixedPointScan> scan;
    int empirical_cycle_count = 0;
};

/// Machine-readable analysis document. schema_version gates the JSON layout.
struct Report {
    int schema_version = 1;
    std::string label;  // file path or catalog label
    ClosingReport closing;
    std::optional<VerificationBundle> verification;
};

nlohmann::json to_json(const ClosingReport& rep);
ClosingReport closing_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationBundle& v);
nlohmann::json to_json(const Report& rep);
Report report_from_json(const nlohmann::json& j);

std::string serialize_report(const Report& rep);

}  // namespace pwc

#endif
