#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ecpoly/cli.hpp"
#include "json.hpp"

namespace ecpoly {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Compute) {
  EXPECT_EQ(run_cli({"compute", "C4", "--format", "text"}).out, "x^4 + 4x^3\n");
  EXPECT_EQ(run_cli({"compute", "F2,3", "--format", "json"}).out, "{\"min_degree\":4,\"coeffs\":[9,6,1]}\n");
  EXPECT_EQ(run_cli({"compute", "Bw", "--format", "csv"}).out, "input,polynomial\nBw,x^3 + 3x^2\n");
}

TEST(Cli, FileInputKeepsOrder) {
  const auto path = std::filesystem::temp_directory_path() / "ecpoly_cli_graphs.g6";
  {
    std::ofstream f(path);
    f << "C~\n\nA_\r\nBw\n";
  }
  const Result r = run_cli({"compute", "--file", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x^6 + 6x^5 + 15x^4 + 16x^3\nx\nx^3 + 3x^2\n");
  EXPECT_EQ(run_cli({"spanning-trees", path.string()}).out, "16\n1\n3\n");
  std::filesystem::remove(path);
}

TEST(Cli, VerifyExitsWithDisagreement) {
  const Result r = run_cli({"verify", "--suite", "paper-all", "--format", "csv"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("petersen_9:petersen,"), std::string::npos);
  EXPECT_NE(r.out.find(",235,2000,DISAGREE\n"), std::string::npos);
  EXPECT_EQ(run_cli({"verify", "--suite", "path,cycle"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "--suite", "nope"}).code, 1);
}

TEST(Cli, Enumerate) {
  const Result r = run_cli({"enumerate", "--order", "6", "--degree", "3"});
  EXPECT_EQ(r.out, "EFz_\nELv_\n");
  EXPECT_EQ(run_cli({"enumerate", "--order", "10", "--degree", "3", "--summary"}).out, "connected: 19\ntotal: 21\n");
  const auto j = nlohmann::ordered_json::parse(run_cli({"enumerate", "--order", "4", "--format", "json"}).out);
  EXPECT_EQ(j["connected_count"], 6);
}

TEST(Cli, Equiv) {
  const Result r = run_cli({"equiv", "--max-order", "4", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  ASSERT_EQ(j["equivalent_pairs"].size(), 1u);  // P4 and K1,3
}

TEST(Cli, RecurrenceScan) {
  const Result r = run_cli({"recurrence-scan", "P4", "--format", "csv"});
  EXPECT_EQ(r.out,
            "edge_index,u,v,recurrence,oracle,equal\n"
            "0,0,1,x^3,x^3,true\n"
            "1,1,2,0,x^3,false\n"
            "2,2,3,x^3,x^3,true\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"compute", "A~"}).code, 1);
  EXPECT_EQ(run_cli({"compute", "C2"}).code, 1);
  const Result capped = run_cli({"compute", "K8", "--max-edges", "20"});
  EXPECT_EQ(capped.code, 3);
  EXPECT_NE(capped.err.find("SizeCapExceeded"), std::string::npos);
  EXPECT_EQ(run_cli({"spanning-trees", "K30"}).code, 3);
  EXPECT_EQ(run_cli({"compute", "--help"}).code, 0);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "ecpoly_cli_out.txt";
  EXPECT_EQ(run_cli({"compute", "C5", "--output", path.string()}).code, 0);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "x^5 + 5x^4");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace ecpoly
