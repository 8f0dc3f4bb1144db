#pragma once

#include <json.hpp>

#include "hyperring/cli/theorems.hpp"

namespace hyperring::cli {

inline constexpr const char* kSchema = "hyperring-lab/1";

/// Tables keyed by element names. `from` validates and throws ParseError on shape problems.
auto multiring_to_json(const Multiring& A) -> nlohmann::json;
auto multiring_from_json(const nlohmann::json& j) -> MultiringPtr;

/// wall_ms is written only when `timing` is set.
auto report_to_json(const VerificationReport& r, bool timing) -> nlohmann::json;
auto report_from_json(const nlohmann::json& j) -> VerificationReport;

/// {"schema", "command": "verify", "reports": [...], "summary": {...}}
auto reports_to_json(const std::vector<VerificationReport>& rs, bool timing) -> nlohmann::json;
/// Throws ParseError on a wrong schema tag or shape.
auto reports_from_json(const nlohmann::json& j) -> std::vector<VerificationReport>;

}  // namespace hyperring::cli
