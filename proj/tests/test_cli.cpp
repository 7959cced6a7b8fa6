#include "support.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

namespace fs = std::filesystem;
using namespace polystab;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(POLYSTAB_CLI) + " " + args + " 2>&1";
  Outcome r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polystab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string read(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), {}};
}

const std::string kThreeVertex = test::data_path("three_vertex_polytope.json");

}  // namespace

TEST_F(Cli, CheckThreeVertex) {
  Outcome r = run("check " + kThreeVertex);
  EXPECT_EQ(r.code, 1);
  json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "NOT_STABLE");
  EXPECT_EQ(j["evidence"]["kind"], "point_witness");
  EXPECT_EQ(j["evidence"]["form"], "a0");
  EXPECT_TRUE(j.contains("timings"));
}

TEST_F(Cli, CheckStableSingleVertex) {
  const std::string f = write("p.json", R"({"vertices": [[["-1", "0"], ["0", "-1"]]]})");
  Outcome r = run("check " + f);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["status"], "ROBUSTLY_STABLE");
}

TEST_F(Cli, CheckUnresolvedAndBound) {
  const std::string f = write("p.json", R"({"vertices": [[["0", "1"], ["-1", "-1"]], [["0", "-2"], ["2", "-1"]]]})");
  EXPECT_EQ(run("check " + f).code, 2);
  Outcome r = run("check " + f + " --full-bound --deterministic");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["evidence"]["kind"], "bound_refutation");
}

TEST_F(Cli, CheckRejectsMalformedInput) {
  Outcome r = run("check " + write("bad.json", R"({"vertices": [[["1", "2", "3"], ["4", "5", "6"]]]})"));
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("vertex 1, row 1"), std::string::npos) << r.out;
  EXPECT_EQ(run("check " + write("junk.json", "{not json")).code, 3);
  EXPECT_EQ(run("check " + path("missing.json")).code, 4);
  EXPECT_EQ(run("check " + kThreeVertex + " --format yaml").code, 3);
  EXPECT_EQ(run("").code, 3);
}

TEST_F(Cli, CheckTextFormat) {
  Outcome r = run("check " + kThreeVertex + " --format text");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("status: NOT_STABLE"), std::string::npos);
  EXPECT_NE(r.out.find("(1/3, 1/3, 1/3)"), std::string::npos);
}

TEST_F(Cli, DeterministicOutputIsByteIdentical) {
  const std::string a = run("check " + kThreeVertex + " --deterministic").out;
  EXPECT_EQ(run("check " + kThreeVertex + " --deterministic").out, a);
  EXPECT_EQ(run("check " + kThreeVertex + " --deterministic --jobs 4").out, a);
  ASSERT_EQ(run("gen --n 3 --m 3 --seed 11 --count 4 --out " + path("g")).code, 0);
  for (const auto& e : fs::directory_iterator(path("g"))) {
    const std::string p = e.path().string();
    const std::string one = run("check " + p + " --deterministic").out;
    EXPECT_EQ(run("check " + p + " --deterministic --jobs 3").out, one) << p;
  }
}

TEST_F(Cli, Positivity) {
  Outcome r = run("positivity \"63/25*x1^3 + 99/25*x1^2*x3 + 243/50*x3^2*x1 + 144/25*x1*x2^2 + 153/25*x1*x2*x3 + "
              "144/25*x1^2*x2 + 243/50*x2*x3^2 + 63/25*x2^3 + 99/25*x2^2*x3 + 171/50*x3^3\"");
  EXPECT_EQ(r.code, 0) << r.out;
  json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"]["status"], "POSITIVE");
  EXPECT_EQ(j["verdict"]["depth_reached"], 0);

  r = run("positivity \"x1^2 - x2^2\"");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["verdict"]["witness"]["point"], json::parse(R"(["0", "1"])"));

  r = run("positivity \"x1 + x2 - x1\"");
  EXPECT_EQ(r.code, 1);
  j = json::parse(r.out);
  EXPECT_EQ(j["verdict"]["witness"]["point"], json::parse(R"(["1", "0"])"));
  EXPECT_EQ(j["verdict"]["witness"]["value"], "0");

  EXPECT_EQ(run("positivity \"x1^2 - 4*x1*x2 + 4*x2^2\"").code, 2);
  EXPECT_EQ(run("positivity \"x1^2 - 4*x1*x2 + 4*x2^2\" --full-bound").code, 1);
  EXPECT_EQ(run("positivity --file " + write("f.txt", "x1^2 + x1*x2 + x2^2\n")).code, 0);
  EXPECT_EQ(run("positivity \"x1 + x2^2\"").code, 3);
  EXPECT_EQ(run("positivity").code, 3);
}

TEST_F(Cli, Gen) {
  ASSERT_EQ(run("gen --n 2 --m 3 --seed 5 --count 3 --out " + path("a")).code, 0);
  ASSERT_EQ(run("gen --n 2 --m 3 --seed 5 --count 3 --out " + path("b")).code, 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(path("a"))) {
    ++files;
    const std::string name = e.path().filename().string();
    EXPECT_EQ(read(e.path().string()), read(path("b") + "/" + name));
    MatrixPolytope p = polytope_from_json(json::parse(read(e.path().string())));
    for (const auto& v : p.vertices()) EXPECT_TRUE(routh_hurwitz_stable(v));
    Outcome r = run("check " + e.path().string());
    EXPECT_LE(r.code, 2);
    EXPECT_FALSE(json::parse(r.out).contains("unstable_vertex"));
  }
  EXPECT_EQ(files, 3u);

  ASSERT_EQ(run("gen --n 1 --m 1 --out " + path("c")).code, 0);
  MatrixPolytope p = polytope_from_json(json::parse(read(path("c") + "/polytope_n1_m1_000.json")));
  EXPECT_LT(p.vertex(0)(0, 0), 0);
}

TEST_F(Cli, Bound) {
  Outcome r = run("bound 1 2 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "9\n");
  r = run("bound 1 2 2");
  EXPECT_EQ(r.out, to_string(cp_bound(1, 2, 2)) + "\n");
  EXPECT_EQ(run("bound 1 1 2").code, 3);
  EXPECT_EQ(run("bound x 2 2").code, 3);
  EXPECT_EQ(run("bound 1 30 30").code, 3);
}

TEST_F(Cli, BenchAndVerify) {
  Outcome r = run("bench --pairs 2x2,3x2 --count 3 --csv " + path("b.csv") + " --json " + path("b.json"));
  EXPECT_EQ(r.code, 0) << r.out;
  const std::string csv = read(path("b.csv"));
  EXPECT_EQ(csv.rfind("n,m,stable,unstable,unresolved,total_seconds,max_seconds,nodes\n2,2,", 0), 0u);
  EXPECT_EQ(json::parse(read(path("b.json")))["rows"].size(), 2u);
  EXPECT_EQ(run("bench --pairs 2by2").code, 3);

  const std::string verdict = write("v.json", run("check " + kThreeVertex + " --deterministic").out);
  EXPECT_EQ(run("verify " + kThreeVertex + " " + verdict).code, 0);
  std::string tampered = read(verdict);
  tampered.replace(tampered.find("\"-1/10\""), 7, "\"-1/11\"");
  EXPECT_EQ(run("verify " + kThreeVertex + " " + write("t.json", tampered)).code, 1);
}
