#pragma once

#include <string>
#include <vector>

#include "charfluct/config.hpp"
#include "charfluct/exact.hpp"
#include "charfluct/fluctuation.hpp"

#include <json.hpp>

namespace charfluct {

// Writes through a temporary file and renames into place.
void write_text_atomic(const std::string& path, const std::string& content);

// CSV files start with the full config as '# key = value' comment lines plus
// one '# generated_at = ...' line (excluded from reproducibility hashes).
std::string diagnostics_csv(const std::vector<DiagnosticsRow>& rows,
                            const ExperimentConfig& config);
nlohmann::json diagnostics_json(const std::vector<DiagnosticsRow>& rows,
                                const ExperimentConfig& config);

std::string fluctuation_csv(const std::vector<ReportRow>& rows,
                            const ExperimentConfig& config);
nlohmann::json fluctuation_json(const std::vector<ReportRow>& rows,
                                const ExperimentConfig& config);

// Concatenates the rows of reports with identical schema and kind.
nlohmann::json merge_reports(const std::vector<nlohmann::json>& reports);
std::string report_to_csv(const nlohmann::json& report);

double format_round_trip(double value);

}  // namespace charfluct
