#include "ecpoly/report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace ecpoly {

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

std::string csv_field(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

namespace {

std::vector<VerificationEntry> sorted_entries(const VerificationReport& report) {
  auto entries = report.entries;
  std::stable_sort(entries.begin(), entries.end(),
                   [](const VerificationEntry& a, const VerificationEntry& b) { return a.claim_id < b.claim_id; });
  return entries;
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : sorted_entries(report)) {
    nlohmann::ordered_json row;
    row["claim_id"] = e.claim_id;
    row["source"] = e.source;
    row["claimed"] = e.claimed;
    row["computed"] = e.computed;
    row["status"] = std::string(to_string(e.status));
    j["entries"].push_back(std::move(row));
  }
  return j;
}

std::string render_report(const VerificationReport& report, ReportFormat format) {
  const auto entries = sorted_entries(report);
  std::ostringstream os;
  switch (format) {
    case ReportFormat::Json:
      os << report_to_json(report).dump(2) << '\n';
      break;
    case ReportFormat::Csv:
      os << "claim_id,source,claimed,computed,status\n";
      for (const auto& e : entries) {
        os << csv_field(e.claim_id) << ',' << csv_field(e.source) << ',' << csv_field(e.claimed) << ','
           << csv_field(e.computed) << ',' << to_string(e.status) << '\n';
      }
      break;
    case ReportFormat::Text: {
      // The source column is long and repeated per claim group; text output
      // keeps it last so the comparison columns stay readable.
      const std::array<std::string, 5> header{"claim_id", "status", "claimed", "computed", "source"};
      std::array<std::size_t, 5> width{};
      for (std::size_t c = 0; c < 5; ++c) width[c] = header[c].size();
      for (const auto& e : entries) {
        width[0] = std::max(width[0], e.claim_id.size());
        width[1] = std::max(width[1], to_string(e.status).size());
        width[2] = std::max(width[2], e.claimed.size());
        width[3] = std::max(width[3], e.computed.size());
      }
      auto row = [&](const std::array<std::string, 5>& cells) {
        std::string line;
        for (std::size_t c = 0; c < 5; ++c) {
          line += cells[c];
          if (c + 1 < 5) line += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        os << line << '\n';
      };
      row(header);
      for (const auto& e : entries) row({e.claim_id, std::string(to_string(e.status)), e.claimed, e.computed, e.source});
      break;
    }
  }
  return os.str();
}

}  // namespace ecpoly
