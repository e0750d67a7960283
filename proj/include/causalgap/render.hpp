#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "causalgap/kernel.hpp"
#include "causalgap/report.hpp"

namespace causalgap {

enum class OutputFormat { Text, Json, Csv };

std::optional<OutputFormat> parse_format(std::string_view name);

/// Locale-independent rendering with 17 significant digits,
/// enough to round-trip any double.
std::string format_double(double value);

/// Scientific notation with `digits` decimals, for human-facing summaries.
std::string format_scientific(double value, int digits = 3);

inline constexpr int report_schema_version = 1;

nlohmann::json report_to_json(const BandpassInterval& band, const ApproximationReport& report);

std::string render_report(const BandpassInterval& band, const ApproximationReport& report,
                          OutputFormat format);

inline constexpr std::string_view sweep_csv_header =
    "param,distance,angle,kernel_norm,method,error_estimate";

std::string sweep_csv_row(double param, const ApproximationReport& report);

} // namespace causalgap
