#pragma once

// Machine-readable output: a versioned JSON envelope around every command
// result, and the CSV table for scans.

#include <string>

#include <json.hpp>

#include "nearprim/density.hpp"
#include "nearprim/scan.hpp"

namespace nearprim {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "nearprim";
inline constexpr const char* kToolVersion = "1.0.0";

// Truncated fixed-point rendering of num/den with the given number of
// decimals, computed in integer arithmetic.
std::string decimal_string(const Rational& r, int decimals = 12);

// {"exact": "num/den", "decimal": "..."}
Json rational_json(const Rational& r);
Json prediction_json(const DensityPrediction& p);
Json task_json(const ProgressionTask& task);
Json scan_report_json(const ScanReport& report);

// Header: class,count,empirical_num,empirical_den,predicted_num,predicted_den,z_score
std::string scan_report_csv(const ScanReport& report);

// {"schema_version", "command", "parameters", "results", "meta"}; keys sorted.
Json make_envelope(const std::string& command, Json parameters, Json results, Json meta);

// Envelope text as printed by the CLI: two-space indent plus newline.
std::string render(const Json& envelope);

}  // namespace nearprim
