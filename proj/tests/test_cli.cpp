#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "loghm/cli.hpp"

namespace loghm::cli {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("loghm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  RunConfig config(const std::string& sub, const std::string& manifest = "") {
    RunConfig c;
    c.subcommand = sub;
    c.manifest = manifest;
    c.grid = GridSpec{32, 128, 1.0 - 1e-4, 20};
    return c;
  }

  int run_capture(const RunConfig& c) {
    out_.str("");
    err_.str("");
    return run(c, out_, err_);
  }

  nlohmann::json out_json() const { return nlohmann::json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

constexpr const char* kTrivial =
    R"({"variant":"NONVANISHING","h":{"preset":"IDENTITY"},"omega":{"preset":"CONST","params":{"c":[0,0]}}})";

TEST_F(CliTest, NormOfTrivialManifest) {
  EXPECT_EQ(run_capture(config("norm", write("m.json", kTrivial))), kExitOk);
  const auto j = out_json();
  EXPECT_NEAR(j.at("value").get<double>(), 1.0, 1e-6);
  EXPECT_FALSE(j.at("bound_violated").get<bool>());
  EXPECT_FALSE(j.at("boundary_divergent").get<bool>());
}

TEST_F(CliTest, BlochAndHarmonicNorm) {
  const auto m = write("m.json", kTrivial);
  EXPECT_EQ(run_capture(config("bloch", m)), kExitOk);
  EXPECT_NEAR(out_json().at("value").get<double>(), 1.0, 1e-6);
  EXPECT_EQ(run_capture(config("harmonic-norm", m)), kExitOk);
  EXPECT_NEAR(out_json().at("value").get<double>(), 0.0, 1e-15);
}

TEST_F(CliTest, KoebeManifestIsDivergent) {
  EXPECT_EQ(run_capture(config("norm", write("k.json", R"({"preset":"LOGHARMONIC_KOEBE"})"))), kExitOk);
  EXPECT_TRUE(out_json().at("boundary_divergent").get<bool>());
  EXPECT_EQ(run_capture(config("bloch", write("k2.json", R"({"preset":"LOGHARMONIC_KOEBE"})"))), kExitInputError);
}

TEST_F(CliTest, NonSensePreservingInputIsNotAViolation) {
  const auto m = write("w.json",
                       R"({"variant":"NONVANISHING","h":{"preset":"KOEBE_LOG"},"omega":{"series":[[0,0],[3,0]]}})");
  EXPECT_EQ(run_capture(config("norm", m)), kExitOk);
  EXPECT_FALSE(out_json().contains("bound_violated"));
}

TEST_F(CliTest, InputErrorsExitTwo) {
  EXPECT_EQ(run_capture(config("norm", write("bad.json", "{ not json"))), kExitInputError);
  EXPECT_EQ(run_capture(config("norm", write("bad2.json", R"({"variant":"NONVANISHING"})"))), kExitInputError);
  EXPECT_EQ(run_capture(config("norm", (dir_ / "absent.json").string())), kExitInputError);
  EXPECT_EQ(run_capture(config("norm")), kExitInputError);
  EXPECT_EQ(run_capture(config("frobnicate")), kExitInputError);
  auto c = config("norm", write("m.json", kTrivial));
  c.grid.radii_count = 2;
  EXPECT_EQ(run_capture(c), kExitInputError);
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(CliTest, StarlikeReports) {
  const auto cex = write(
      "c.json", R"({"variant":"ORIGIN_FIXED","h":{"preset":"LOG1P"},"omega":{"preset":"NEGZ"}})");
  EXPECT_EQ(run_capture(config("starlike", cex)), kExitOk);
  EXPECT_EQ(out_json().at("verdict"), "FIELD_NEGATIVE");
  const auto fa = write(
      "f.json", R"({"variant":"ORIGIN_FIXED","h":{"preset":"QUAD","params":{"alpha":0.6}},"omega":{"preset":"SCALEZ"}})");
  auto c = config("starlike", fa);
  EXPECT_EQ(run_capture(c), kExitOk);
  const auto j = out_json();
  EXPECT_EQ(j.at("verdict"), "PASS_CRITERION");
  EXPECT_EQ(j.at("conclusion"), "fully starlike (criterion)");
  EXPECT_LE(j.at("oracle").at("discrepancy").get<double>(), 1e-4);
}

TEST_F(CliTest, RenderWritesDeterministicSvg) {
  auto c = config("render");
  c.alpha = 0.8;
  c.out = (dir_ / "a.svg").string();
  EXPECT_EQ(run_capture(c), kExitOk);
  c.out = (dir_ / "b.svg").string();
  EXPECT_EQ(run_capture(c), kExitOk);
  const auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  EXPECT_EQ(slurp(dir_ / "a.svg"), slurp(dir_ / "b.svg"));
  EXPECT_NE(slurp(dir_ / "a.svg").find("<svg"), std::string::npos);

  auto csv = config("render", write("f.json", R"({"variant":"ORIGIN_FIXED","h":{"preset":"QUAD","params":{"alpha":0.2}},"omega":{"preset":"SCALEZ"}})"));
  csv.alpha = 1.0;
  csv.format = "csv";
  EXPECT_EQ(run_capture(csv), kExitOk);
  EXPECT_EQ(out_.str().rfind("r,theta,re,im\n", 0), 0u);
  EXPECT_EQ(run_capture(config("render")), kExitInputError);
}

TEST_F(CliTest, RandomSuiteDeterministic) {
  auto c = config("random-suite");
  c.count = 3;
  c.seed = 11;
  EXPECT_EQ(run_capture(c), kExitOk);
  const auto first = out_.str();
  EXPECT_EQ(run_capture(c), kExitOk);
  EXPECT_EQ(out_.str(), first);
  const auto j = nlohmann::json::parse(first);
  EXPECT_EQ(j.at("count"), 3);
  EXPECT_TRUE(j.at("violations").empty());
  EXPECT_LE(j.at("max_norm").get<double>(), 11.0 + 1e-6);
}

TEST_F(CliTest, RandomSuiteFromInstanceFile) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& inst : random_instances(2, 4)) list.push_back(to_json(inst));
  auto c = config("random-suite");
  c.instances = write("inst.json", list.dump());
  EXPECT_EQ(run_capture(c), kExitOk);
  EXPECT_EQ(out_json().at("count"), 2);
  c.instances = write("bad.json", R"([{"epsilon":{"zeros":[[2,0]]},"omega":{}}])");
  EXPECT_EQ(run_capture(c), kExitInputError);
}

TEST_F(CliTest, VerifySharpnessAndGrowthReports) {
  auto s = config("verify-sharpness");
  run_capture(s);
  const auto sj = out_json();
  EXPECT_EQ(sj.at("scans").size(), 6u);
  EXPECT_LE(sj.at("grid_max_E").get<double>(), 11.0);

  EXPECT_EQ(run_capture(config("verify-growth")), kExitOk);
  const auto gj = out_json();
  EXPECT_TRUE(gj.contains("families"));
}

TEST_F(CliTest, BinaryParsesFlags) {
  const std::string bin = LOGHM_CLI_PATH;
  const auto m = write("m.json", kTrivial);
  const auto out = (dir_ / "o.json").string();
  EXPECT_EQ(std::system((bin + " norm --manifest " + m + " --grid-radii 16 --grid-angles 64 --out " + out).c_str()), 0);
  std::ifstream in(out);
  const auto j = nlohmann::json::parse(in);
  EXPECT_NEAR(j.at("value").get<double>(), 1.0, 1e-6);
  const int bad = std::system((bin + " norm --no-such-flag > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(bad), 2);
  const int missing = std::system((bin + " norm --manifest " + (dir_ / "none.json").string() + " > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(missing), 2);
}

}  // namespace
}  // namespace loghm::cli
