#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = kummer::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::string data(const std::string& name) { return std::string(KUMMER_DATA_DIR) + "/" + name + ".json"; }

}  // namespace

TEST(Cli, CurveInfoFromFile) {
  const auto j = run_json({"curve-info", "--curve", data("z")});
  EXPECT_EQ(j["genus"], 24);
  EXPECT_EQ(j["rational_places"], 2026);
  const auto h = run_json({"curve-info", "--curve", data("h3")});
  EXPECT_EQ(h["genus"], 3);
  EXPECT_EQ(h["beta"], json::array({2, 1, 0}));
}

TEST(Cli, DimOnThreeRootDivisor) {
  const auto j = run_json({"dim", "--curve", data("h3"), "--places", "root:0,root:1,root:2", "--alpha", "-2,2,3"});
  EXPECT_EQ(j["dim"], 1);
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["classification"], "NonspecialDegG");
  const auto s = run_json({"dim", "--curve", "h3", "--places", "inf,root:0,root:1,root:2", "--alpha", "-1,-2,2,3"});
  EXPECT_EQ(s["classification"], "Special");
}

TEST(Cli, NecessaryConditionOnGk) {
  const auto j = run_json({"nonspecial-check", "--curve", data("gk2"), "--tuple", "all-ramified", "--necessary-only"});
  EXPECT_EQ(j["possible"], false);
  EXPECT_EQ(j["witness"], "floor(degf/m)=0 < r-n-1=1");
}

TEST(Cli, EnumerateFamilies) {
  const auto j = run_json({"nonspecial-enumerate", "--curve", "h3", "--family", "separable", "--alpha0", "1"});
  ASSERT_EQ(j["families"].size(), 1u);
  EXPECT_EQ(j["families"][0]["alpha_multiset"], json::array({0, 2, 3}));
  EXPECT_EQ(j["families"][0]["alpha0"], 1);
}

TEST(Cli, BuildThenVerifyRoundTrip) {
  for (const char* cons : {"1", "2", "R"}) {
    const auto r = run({"lcp-build", "--curve", "h3", "--construction", cons, "--s", "3"});
    ASSERT_EQ(r.code, 0) << cons << r.err;
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["report"]["verdict"], "LCP");
    const auto path = std::filesystem::temp_directory_path() / (std::string("kummer_result_") + cons + ".json");
    std::ofstream(path) << r.out;
    const auto v = run_json({"lcp-verify", "--result", path.string()});
    EXPECT_EQ(v["report"]["verdict"], "LCP") << cons;
    std::filesystem::remove(path);
  }
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"lcp-build", "--curve", "h3", "--construction", "1", "--s", "2"};
  EXPECT_EQ(run(args).out, run(args).out);
  const auto a = run({"code-info", "--curve", "h3", "--places", "inf", "--alpha", "9", "--samples", "20", "--seed", "4"});
  const auto b = run({"code-info", "--curve", "h3", "--places", "inf", "--alpha", "9", "--samples", "20", "--seed", "4"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TsvFormat) {
  const auto r = run({"curve-info", "--curve", "h3", "--format", "tsv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("genus\t3"), std::string::npos) << r.out;
}

TEST(Cli, ValidationErrorsExitTwo) {
  const auto r = run({"lcp-build", "--curve", "h3", "--construction", "1", "--s", "8"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  const auto e = json::parse(r.err);
  EXPECT_EQ(e["error"]["code"], "SRangeViolation");
  const auto bad_flag = run({"curve-info", "--curve", "h3", "--bogus"});
  EXPECT_EQ(bad_flag.code, 2);
  EXPECT_EQ(json::parse(bad_flag.err)["error"]["code"], "ParseError");
  const auto missing = run({"curve-info", "--curve", "/nonexistent/curve.json"});
  EXPECT_EQ(missing.code, 2);
  const auto cond = run({"lcp-build", "--curve", "h3", "--construction", "2", "--s", "2"});
  EXPECT_EQ(cond.code, 2);
  EXPECT_EQ(json::parse(cond.err)["error"]["detail"], "ii");
}
