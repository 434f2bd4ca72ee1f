#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Result {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and returns its exit status and stdout.
Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(BACONF_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Json run_json(const std::string& args, int expected_code = 0) {
  const Result r = run(args);
  EXPECT_EQ(r.code, expected_code) << args;
  return Json::parse(r.out);
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("baconf_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ConstructAm1nWritesElementaryValues) {
  ASSERT_EQ(run("construct am1n --m 2 --n 2 --precision 256 -o " + path("out.json")).code, 0);
  std::ifstream in(path("out.json"));
  const Json j = Json::parse(in);
  EXPECT_EQ(j["e"], (std::vector<std::string>{"-4/3", "1"}));
  EXPECT_EQ(j["lines"].size(), 3u);
}

TEST_F(CliTest, ConstructTwoMultAndExpand) {
  const Json tm = run_json("construct twomult --m 3 --mt 2 --n 4");
  EXPECT_EQ(tm["e"].size(), 4u);
  EXPECT_EQ(tm["lines"].size(), 6u);
  ASSERT_EQ(run("construct am1n --m 2 --n 2 -o " + path("base.json")).code, 0);
  const Json tq = run_json("construct tq --input " + path("base.json") + " --q 3");
  EXPECT_EQ(tq["lines"].size(), 9u);
}

TEST_F(CliTest, ConstructIsDeterministic) {
  const Result a = run("construct random --m 2 --n 3 --config-seed 4");
  const Result b = run("construct random --m 2 --n 3 --config-seed 4");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, CertifyExitCodes) {
  const Json pass = run_json("certify --family am1n --m 4 --n 5", 0);
  EXPECT_EQ(pass["verdict"], "pass");
  const Json fail = run_json("certify --family random --m 2 --n 3", 1);
  EXPECT_EQ(fail["verdict"], "fail");
  EXPECT_TRUE(fail["max_residual_log2"].is_number());
  EXPECT_EQ(run("certify --family am1n --m 4 --n 5 --perturb-line 2").code, 1);
}

TEST_F(CliTest, HilbertExamples) {
  ASSERT_EQ(run("construct am1n --m 2 --n 2 -o " + path("am1n_2_2.json")).code, 0);
  const Json h = run_json("hilbert --input " + path("am1n_2_2.json") + " --D 10");
  EXPECT_EQ(h["coefficients"], (std::vector<long>{1, 0, 1, 1, 2, 2, 4, 4, 5, 6, 7}));
  EXPECT_EQ(h["gorenstein"], true);
  EXPECT_EQ(h["M"], -6);
  const Json r = run_json("hilbert --random --m 2 --n 2 --seed 1");
  EXPECT_EQ(r["gorenstein"], false);
  EXPECT_EQ(run("hilbert --family am1n --m 2 --n 3 --check-closed-form").code, 0);
  EXPECT_EQ(run("hilbert --random --m 2 --n 3 --check-closed-form").code, 1);
}

TEST_F(CliTest, HilbertCsv) {
  ASSERT_EQ(run("hilbert --family am1n --m 1 --n 1 --csv " + path("b.csv")).code, 0);
  std::ifstream in(path("b.csv"));
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text.rfind("degree,b\n0,1\n1,0\n2,2\n", 0), 0u);
}

TEST_F(CliTest, ScanGorenstein) {
  const Json j = run_json("scan gorenstein --m 1..2 --n 2..3 --samples 3");
  EXPECT_EQ(j["failures"], 0);
  EXPECT_EQ(j["total"], 4 * (1 + 3));
  EXPECT_EQ(j["manifest"]["subcommand"], "scan gorenstein");
}

TEST_F(CliTest, ScanCertifyAndDarboux) {
  const Json c = run_json("scan certify --family tq --m 1..2 --n 2 --q 1..2");
  EXPECT_EQ(c["failures"], 0);
  EXPECT_GT(c["total"].get<long>(), 0);
  const Json d = run_json("scan darboux --m 1..2 --mt 0..m --n 2,4");
  EXPECT_EQ(d["failures"], 0);
  EXPECT_EQ(d["total"], 2 * (2 + 3));
}

TEST_F(CliTest, DarbouxSingleChain) {
  const Json j = run_json("darboux --m 3 --mt 2 --n 2");
  EXPECT_EQ(j["levels"], (std::vector<long>{1, 3, 7}));
  EXPECT_EQ(j["eigen"], "exact-pass");
  EXPECT_EQ(run("darboux --m 1 --mt 2 --n 2").code, 3);
}

TEST_F(CliTest, UsageAndComputationErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("construct bogus").code, 2);
  EXPECT_EQ(run("--precision 8 construct am1n --m 1 --n 1").code, 2);
  EXPECT_EQ(run("construct am1n --m 0 --n 2").code, 3);
  EXPECT_EQ(run("construct twomult --m 2 --mt 1 --n 3").code, 3);
  EXPECT_EQ(run("construct tq --input " + path("missing.json") + " --q 2").code, 3);
}

TEST_F(CliTest, ManifestAndPrecisionEnvironment) {
  const Json j = run_json("hilbert --family am1n --m 1 --n 1");
  const Json& m = j["manifest"];
  for (const char* key : {"subcommand", "parameters", "seed", "precision_bits", "outputs", "tool_version", "wall_clock_s"})
    EXPECT_TRUE(m.contains(key)) << key;
  const Json e = run_json("construct am1n --m 1 --n 1");
  EXPECT_EQ(e["precision_bits"], 256);
  const Result env = run("construct am1n --m 1 --n 1", "BA_PRECISION=128");
  EXPECT_EQ(env.code, 0);
  EXPECT_EQ(Json::parse(env.out)["precision_bits"], 128);
  EXPECT_EQ(run_json("--precision 512 construct am1n --m 1 --n 1")["precision_bits"], 512);
}
