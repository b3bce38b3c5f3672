#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "facering/criteria.hpp"
#include "facering/document.hpp"
#include "facering/field.hpp"

namespace facering {

inline constexpr int report_schema = 1;

std::string tool_version();

struct AnalysisOptions {
    std::vector<FieldSpec> fields;
    std::optional<int> d_max;  // default_tor_degree(n) when unset
    bool report_only = false;
};

struct AnalysisResult {
    nlohmann::ordered_json report;
    /// Route disagreements on CM / Gorenstein* and failed internal consistency checks.
    std::vector<std::string> problems;
};

/// Full per-field analysis. Throws ConsistencyError on the first problem unless report_only.
AnalysisResult analyze(const ComplexDocument& doc, const AnalysisOptions& options);
std::string render_text(const nlohmann::ordered_json& report);

nlohmann::ordered_json crossval_json(const CrossValidationReport& report);
std::string render_crossval_text(const CrossValidationReport& report);

std::vector<FieldSpec> parse_field_list(const std::string& text);

} // namespace facering
