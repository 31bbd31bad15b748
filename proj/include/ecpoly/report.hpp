#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ecpoly/claims.hpp"
#include "json.hpp"

namespace ecpoly {

enum class ReportFormat { Text, Json, Csv };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// CSV quoting: fields containing a comma, quote or newline are wrapped in
/// quotes with inner quotes doubled.
std::string csv_field(std::string_view value);

nlohmann::ordered_json report_to_json(const VerificationReport& report);

/// Rows are emitted sorted by claim_id whatever the input order.
/// CSV: header claim_id,source,claimed,computed,status plus one row per entry.
/// JSON: {"entries": [...]} with the same field names.
/// Text: left-aligned table with the same columns.
std::string render_report(const VerificationReport& report, ReportFormat format);

}  // namespace ecpoly
