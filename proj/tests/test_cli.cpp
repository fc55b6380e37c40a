#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <gtest/gtest.h>
#include <json.hpp>
#include <sstream>

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "daqb");
  std::vector<const char *> argv;
  for (const auto &a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = daqb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string &s) { return s.substr(0, s.find('\n')); }

} // namespace

TEST(Cli, NormalizeExamples) {
  EXPECT_EQ(run({"normalize", "-n", "3", "T1 Q1"}).out, "Q2 T1\n");
  EXPECT_EQ(run({"normalize", "-n", "3", "T1 T1^-1"}).out, "e\n");
  EXPECT_EQ(run({"normalize", "-n", "3", "--strategy", "sigma-right", "T1 s"}).out, "s T2\n");
}

TEST(Cli, NormalizeExitCodes) {
  const Outcome bad = run({"normalize", "-n", "3", "T1 X"});
  EXPECT_EQ(bad.code, daqb::cli::BadInput);
  EXPECT_NE(bad.err.find("parse error"), std::string::npos);
  EXPECT_EQ(run({"normalize", "-n", "3", "T3"}).code, daqb::cli::BadInput);
  EXPECT_EQ(run({"normalize", "-n", "3", "--family", "B", "Y1"}).code, daqb::cli::BadInput);
  const Outcome budget = run({"normalize", "--strategy", "sigma-right", "--budget", "1", "T1 T2 s s"});
  EXPECT_EQ(budget.code, daqb::cli::OutOfBudget);
  EXPECT_FALSE(budget.out.empty());
}

TEST(Cli, NormalizeJson) {
  const Outcome r = run({"normalize", "-n", "3", "--format", "json", "T1 Q1"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["word"], "Q2 T1");
  EXPECT_TRUE(j["normal"].get<bool>());
  ASSERT_EQ(j["pipeline"].size(), 2u);
  EXPECT_EQ(j["pipeline"][1]["strategy"], "q-prefix");
  EXPECT_EQ(j["pipeline"][1]["trace"][0][0], "Q-transport");
}

TEST(Cli, EqVerdictsAndExitCodes) {
  const Outcome yzt = run({"eq", "-n", "3", "Y1 Z2 Y1^-1 Z2^-1", "T1 T1"});
  EXPECT_EQ(yzt.code, 0);
  EXPECT_EQ(first_line(yzt.out), "Equal");
  const Outcome q = run({"eq", "-n", "3", "Q1", "e"});
  EXPECT_EQ(q.code, 1);
  EXPECT_EQ(first_line(q.out), "Distinct");
  EXPECT_EQ(run({"eq", "-n", "3", "s s s", "Y1 Y2 Y3"}).code, 0);
  const Outcome unknown = run({"eq", "-n", "3", "T1^2", "e"});
  EXPECT_EQ(unknown.code, 4);
  EXPECT_EQ(first_line(unknown.out), "Unknown");

  const json j = json::parse(run({"eq", "-n", "3", "--format", "json", "Q1", "e"}).out);
  EXPECT_EQ(j["verdict"], "Distinct");
  EXPECT_TRUE(j.contains("image_a"));
}

TEST(Cli, HeckeExamples) {
  EXPECT_EQ(run({"hecke", "-n", "3", "T1 T1"}).out, "(s - s^-1) T1 + 1\n");
  EXPECT_EQ(run({"hecke", "-n", "3", "T1 T1^-1"}).out, "1\n");
  EXPECT_EQ(run({"hecke", "-n", "3", "T1 Y2"}).out, "Y1 T1 - (s - s^-1) Y1\n");
  EXPECT_EQ(run({"hecke", "-n", "3", "T1 T1 - 2*T1 + -1"}).out, "(s - 2 - s^-1) T1\n");
  EXPECT_EQ(run({"hecke", "-n", "3", "T1 T1 - T1 T1"}).out, "0\n");
  EXPECT_EQ(run({"hecke", "-n", "3", "Z1"}).code, daqb::cli::BadInput);
  const json j = json::parse(run({"hecke", "-n", "3", "--format", "json", "T1 T1"}).out);
  EXPECT_EQ(j["algebra"], "finite");
  EXPECT_EQ(j["terms"].size(), 2u);
}

TEST(Cli, InvariantAndRelations) {
  EXPECT_EQ(run({"invariant", "-n", "3", "Q2"}).out, "perm [1 2 3] strands (0,0,0) (0,0,1) (0,0,0)\n");
  const json rel = json::parse(run({"relations", "-n", "3", "--family", "B", "--format", "json"}).out);
  EXPECT_EQ(rel["family"], "B");
  EXPECT_EQ(rel["count"], rel["relations"].size());
  const Outcome text = run({"relations", "-n", "3", "--family", "B"});
  EXPECT_NE(text.out.find("T2: T1 T2 T1 = T2 T1 T2"), std::string::npos);
  EXPECT_NE(text.out.find("T5: T1 Q1 = Q2 T1"), std::string::npos);
}

TEST(Cli, VerifySuites) {
  for (const char *suite : {"relations", "homomorphism", "appendix-a", "daha"}) {
    const Outcome r = run({"verify", suite, "-n", "3", "--format", "json"});
    EXPECT_EQ(r.code, 0) << suite;
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>()) << suite;
    EXPECT_EQ(j["failed"], 0);
    EXPECT_EQ(j["total"], j["checks"].size());
    for (const auto &c : j["checks"]) {
      EXPECT_TRUE(c.contains("label"));
      EXPECT_TRUE(c["passed"].get<bool>()) << suite << " " << c.dump();
    }
  }
  const json daha = json::parse(run({"verify", "daha", "-n", "3", "--format", "json"}).out);
  for (const auto &c : daha["checks"]) {
    const std::string label = c["label"];
    EXPECT_EQ(c["observed_q"], label == "YZT1" ? 0 : label.rfind("YZ1", 0) == 0 ? 1 : -1) << label;
  }
  EXPECT_EQ(run({"verify", "nope"}).code, daqb::cli::BadInput);
}

TEST(Cli, VerifyTwist) {
  const Outcome r = run({"verify", "twist", "--samples", "16384", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  for (const auto &c : j["checks"])
    if (c["label"] == "analytic-Q") {
      EXPECT_NEAR(c["total_twist"].get<double>(), 2 * 3.141592653589793, 1e-6);
      EXPECT_EQ(c["samples"], 16385);
    }
}

TEST(Cli, TwistCommand) {
  const json j = json::parse(run({"twist", "Q2", "--samples", "1024", "--format", "json"}).out);
  EXPECT_NEAR(j["turns"].get<double>(), 1.0, 1e-9);
  EXPECT_NEAR(json::parse(run({"twist", "Y1", "--format", "json"}).out)["total_twist"].get<double>(), 0, 1e-9);
  EXPECT_EQ(run({"twist", "T1 T2"}).code, daqb::cli::BadInput);
  EXPECT_EQ(run({"twist", "s"}).code, daqb::cli::BadInput);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const char *suite : {"relations", "appendix-a", "daha", "twist"}) {
    const std::vector<std::string> args{"verify", suite, "-n", "3", "--samples", "256", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out) << suite;
  }
  const json t = json::parse(run({"verify", "daha", "--timings", "--format", "json"}).out);
  EXPECT_TRUE(t.contains("elapsed_ms"));
}

TEST(Cli, ConfigFileAndEnvironment) {
  const std::string path = ::testing::TempDir() + "daqb_cli_config.json";
  {
    std::ofstream f(path);
    f << R"({"n": 4, "family": "B", "format": "json"})";
  }
  const json j = json::parse(run({"--config", path, "relations"}).out);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["family"], "B");
  // flags beat the config file
  EXPECT_EQ(json::parse(run({"--config", path, "relations", "-n", "2"}).out)["n"], 2);

  ::setenv("DAQB_N", "5", 1);
  EXPECT_EQ(json::parse(run({"relations", "--format", "json"}).out)["n"], 5);
  EXPECT_EQ(json::parse(run({"--config", path, "relations"}).out)["n"], 4);
  ::unsetenv("DAQB_N");

  {
    std::ofstream f(path);
    f << "[1, 2]";
  }
  EXPECT_EQ(run({"--config", path, "relations"}).code, daqb::cli::BadInput);
}

TEST(Cli, ConfigValidation) {
  EXPECT_EQ(run({"relations", "--tolerance", "0.5"}).code, daqb::cli::BadInput);
  EXPECT_EQ(run({"relations", "--budget", "0"}).code, daqb::cli::BadInput);
  EXPECT_EQ(run({"relations", "-n", "1"}).code, daqb::cli::BadInput);
  EXPECT_EQ(run({"relations", "--family", "X"}).code, daqb::cli::BadInput);
  EXPECT_EQ(run({"relations", "--format", "xml"}).code, daqb::cli::BadInput);
  EXPECT_EQ(run({}).code, daqb::cli::BadInput);
  EXPECT_EQ(run({"--help"}).code, 0);
}
