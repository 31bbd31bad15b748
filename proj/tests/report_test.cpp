#include <gtest/gtest.h>

#include "ecpoly/report.hpp"

namespace ecpoly {
namespace {

VerificationReport sample() {
  VerificationReport r;
  r.entries.push_back({"zeta", "s, with comma", "1", "2", ClaimStatus::Disagree});
  r.entries.push_back({"alpha", "say \"hi\"", "x^2", "x^2", ClaimStatus::Agree});
  return r;
}

TEST(Report, CsvQuotingAndOrder) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("q\"q"), "\"q\"\"q\"");
  EXPECT_EQ(render_report(sample(), ReportFormat::Csv),
            "claim_id,source,claimed,computed,status\n"
            "alpha,\"say \"\"hi\"\"\",x^2,x^2,AGREE\n"
            "zeta,\"s, with comma\",1,2,DISAGREE\n");
}

TEST(Report, Json) {
  const auto j = nlohmann::ordered_json::parse(render_report(sample(), ReportFormat::Json));
  ASSERT_EQ(j["entries"].size(), 2u);
  EXPECT_EQ(j["entries"][0]["claim_id"], "alpha");
  EXPECT_EQ(j["entries"][1]["status"], "DISAGREE");
  EXPECT_EQ(j["entries"][1]["computed"], "2");
}

TEST(Report, Text) {
  const std::string text = render_report(sample(), ReportFormat::Text);
  EXPECT_LT(text.find("alpha"), text.find("zeta"));
  EXPECT_NE(text.find("DISAGREE"), std::string::npos);
  EXPECT_EQ(text.substr(0, 8), "claim_id");
}

TEST(Report, Formats) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::Csv);
  EXPECT_EQ(parse_report_format("json"), ReportFormat::Json);
  EXPECT_EQ(parse_report_format("text"), ReportFormat::Text);
  EXPECT_FALSE(parse_report_format("xml").has_value());
}

}  // namespace
}  // namespace ecpoly
