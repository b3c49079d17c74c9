#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "twistchar/scan.hpp"

namespace twistchar {

std::string to_string(SignRule rule);
std::optional<SignRule> parse_sign_rule(const std::string& name);

/// Coefficients of the element in the power basis 1, w, ..., w^{d-1}.
nlohmann::json coeffs_json(const CycloElem& x);

/// Every record carries theorem, lambda, t, n, seed and match.
nlohmann::json report_json(const VerificationReport& report);
nlohmann::json record_json(const ScanRecord& record);
nlohmann::json summary_json(const ScanSummary& summary);
nlohmann::json classify_json(const Partition& lambda, int t, int n);

std::string report_text(const VerificationReport& report);
std::string record_text(const ScanRecord& record);
std::string summary_text(const ScanSummary& summary);
std::string classify_text(const Partition& lambda, int t, int n);

/// "(3,1),(),(2)" style rendering of a tuple of partitions.
std::string tuple_string(const std::vector<Partition>& parts);

}  // namespace twistchar
