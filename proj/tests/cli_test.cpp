#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "covred/cli.hpp"
#include "fixtures.hpp"

namespace {

using fixtures::data_path;
using nlohmann::json;

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = covred::cli::run_command(args, out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::vector<std::string>> pairs(const json& arr) { return arr.get<std::vector<std::vector<std::string>>>(); }

const std::vector<std::vector<std::string>> six_reducts = {{"C1", "C2"}, {"C1", "C4"}, {"C2", "C3"},
                                                           {"C2", "C5"}, {"C3", "C4"}, {"C4", "C5"}};

TEST(Cli, ReduceEmitsSixReductsInOrder) {
  const auto r = run({"reduce", "--input", data_path("eight_objects.json"), "--oracle"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["kind"], "reducts");
  EXPECT_EQ(pairs(j["reducts"]), six_reducts);
  EXPECT_TRUE(j["oracle_agrees"].get<bool>());
  EXPECT_EQ(j["related_family"]["members"][0]["coverings"], json({"C1", "C3", "C5"}));
}

TEST(Cli, CheckReportsInconsistentSingleCovering) {
  const auto r = run({"check", "--input", data_path("single_covering.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["consistency"], "inconsistent");
}

TEST(Cli, ApplyAddThenDeleteRestoresReducts) {
  const auto r = run({"apply", "--input", data_path("eight_objects.json"), "--events", data_path("add_then_delete.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  ASSERT_EQ(j["steps"].size(), 3u);
  EXPECT_EQ(j["steps"][1]["reducts"], j["initial"]["reducts"]);
  EXPECT_EQ(j["steps"][1]["related_family"], j["initial"]["related_family"]);
  EXPECT_EQ(pairs(j["steps"][2]["reducts"]["implicants"]), six_reducts);
  EXPECT_EQ(j["steps"][2]["notes"].size(), 1u);
}

TEST(Cli, RegionsWithSelection) {
  const auto r = run({"regions", "--input", data_path("eight_objects.json"), "--selection", "C1"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["positive"], json({"x1", "x2", "x3", "x4", "x5", "x6"}));
  EXPECT_EQ(j["per_class"][0]["lower"], json({"x1", "x2", "x3"}));
}

TEST(Cli, RelatedListsWitnessBlocks) {
  const auto r = run({"related", "--input", data_path("eight_objects.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["distinct"].size(), 4u);
}

TEST(Cli, ConvertWritesValidDocument) {
  const auto out = (std::filesystem::temp_directory_path() / "covred_convert_test.json").string();
  const auto r = run({"convert", "--input", data_path("small_table.csv"), "--radius", "temperature=2", "--output", out});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto c = run({"check", "--input", out});
  EXPECT_EQ(c.status, 0) << c.err;
  std::remove(out.c_str());
}

TEST(Cli, SmallSyntheticBenchSucceeds) {
  const auto r = run({"bench", "--objects", "300", "--coverings", "4", "--classes", "3", "--adds", "10", "--deletes",
                      "10", "--trials", "2", "--seed", "5"});
  ASSERT_EQ(r.status, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["status"], "OK");
  EXPECT_EQ(j["events"], 40);
}

TEST(Cli, ReplayBenchSucceeds) {
  const auto r = run({"bench", "--input", data_path("eight_objects.json"), "--events", data_path("add_then_delete.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["identical_outputs"].get<bool>());
}

TEST(Cli, ErrorsCarryExitCodes) {
  auto r = run({});
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(json::parse(r.err)["error"]["kind"], "usage");
  r = run({"reduce"});
  EXPECT_EQ(r.status, 1);
  r = run({"reduce", "--input", "/nonexistent/file.json"});
  EXPECT_EQ(r.status, 1);
  r = run({"reduce", "--input", data_path("single_covering.json"), "--implicant-cap", "0"});
  EXPECT_EQ(r.status, 3) << r.err;
  r = run({"reduce", "--input", data_path("eight_objects.json"), "--oracle", "--oracle-guard", "3"});
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(json::parse(r.err)["error"]["code"], 3);
  r = run({"check", "--input", data_path("small_table.csv")});
  EXPECT_EQ(r.status, 2);
  r = run({"regions", "--input", data_path("eight_objects.json"), "--selection", "C9"});
  EXPECT_EQ(r.status, 1);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("reduce"), std::string::npos);
}

}  // namespace
