#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pmc/instances.hpp"

#ifndef PMC_CLI_PATH
#error "PMC_CLI_PATH must be defined"
#endif

using namespace pmc;
using namespace pmc::testing;
namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pmc_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const {
    const std::string cmd = std::string(PMC_CLI_PATH) + " " + args + " >" + tmp("stdout") + " 2>" + tmp("stderr");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string slurp(const std::string& path) const {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }
  std::string out() const { return slurp(tmp("stdout")); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, SolveF2) {
  for (const char* alg : {"pbfs", "ds-ibfs", "ds-prf"}) {
    ASSERT_EQ(run(std::string("solve --alg ") + alg + " --input " + fixture_path("f2.pmax") + " --output " +
                  tmp("f2.csv") + " --stats " + tmp("stats.json")),
              0)
        << alg;
    const BreakpointFunction bp = parse_breakpoints_csv(slurp(tmp("f2.csv")));
    EXPECT_EQ(bp.beta[f2::b], 1.0) << alg;
    EXPECT_EQ(bp.beta[f2::a], 1.5) << alg;
    const std::string stats = slurp(tmp("stats.json"));
    for (const char* key : {"breakpoints", "adoptions", "bottleneck_edges", "init_ms", "loop_ms",
                            "contracted_vertices", "contraction_ms"})
      EXPECT_NE(stats.find(std::string("\"") + key + "\""), std::string::npos) << key;
  }
}

TEST_F(Cli, SolveToStdout) {
  ASSERT_EQ(run("solve --alg pbfs --input " + fixture_path("f1.pmax")), 0);
  EXPECT_EQ(out(), "vertex,breakpoint\n1,0\n2,inf\n3,1\n");
}

TEST_F(Cli, EpsilonReducesBreakpoints) {
  ASSERT_EQ(run("solve --alg ds-ibfs --input " + fixture_path("f2.pmax")), 0);
  const std::size_t exact = count_breakpoints(parse_breakpoints_csv(out()), 0.0);
  ASSERT_EQ(run("solve --alg ds-ibfs --epsilon 0.1 --input " + fixture_path("f2.pmax")), 0);
  EXPECT_LE(count_breakpoints(parse_breakpoints_csv(out()), 0.0), exact);
}

TEST_F(Cli, SolveErrors) {
  EXPECT_EQ(run("solve --alg pbfs --input " + tmp("missing.pmax")), 1);
  std::ofstream(tmp("bad.pmax")) << "p pmax 3 1\nn 1 s\nn 2 t\nl 0 1\na 1 3 -1 2\n";
  EXPECT_EQ(run("solve --alg pbfs --input " + tmp("bad.pmax") + " --output " + tmp("never.csv")), 1);
  EXPECT_FALSE(fs::exists(tmp("never.csv")));
  EXPECT_EQ(run("solve --alg nope --input " + fixture_path("f2.pmax")), 1);
  EXPECT_EQ(run("solve --alg pbfs"), 1);
}

TEST_F(Cli, Verify) {
  ASSERT_EQ(run("solve --input " + fixture_path("f2.pmax") + " --output " + tmp("f2.csv")), 0);
  EXPECT_EQ(run("verify --input " + fixture_path("f2.pmax") + " --breakpoints " + tmp("f2.csv") + " --json " +
                tmp("r.json")),
            0);
  EXPECT_NE(slurp(tmp("r.json")).find("\"pass\": true"), std::string::npos);

  std::ofstream(tmp("bad.csv")) << "vertex,breakpoint\n1,0\n2,inf\n3,1.5\n4,1.4\n";
  EXPECT_EQ(run("verify --input " + fixture_path("f2.pmax") + " --breakpoints " + tmp("bad.csv")), 3);
  EXPECT_NE(out().find("lambda 1.4"), std::string::npos);

  EXPECT_EQ(run("verify --input " + fixture_path("f1.pmax") + " --breakpoints " + tmp("f2.csv")), 1);
}

TEST_F(Cli, GenerateDeterministic) {
  ASSERT_EQ(run("generate synth --input " + fixture_path("static5.max") + " --y 10 --seed 42 --out " + tmp("a.pmax")),
            0);
  ASSERT_EQ(run("generate synth --input " + fixture_path("static5.max") + " --y 10 --seed 42 --out " + tmp("b.pmax")),
            0);
  EXPECT_EQ(slurp(tmp("a.pmax")), slurp(tmp("b.pmax")));
  EXPECT_TRUE(check_monotone(parse_pmax(slurp(tmp("a.pmax")))).empty());
  EXPECT_EQ(run("generate synth --input " + fixture_path("static5.max") + " --y 0.5 --seed 1"), 1);
}

TEST_F(Cli, GenerateAgg) {
  ASSERT_EQ(run("generate agg --input " + fixture_path("two_faces.fg") + " --lambda-max 50 --out " + tmp("agg.pmax")),
            0);
  const ParametricNetwork net = parse_pmax(slurp(tmp("agg.pmax")));
  EXPECT_EQ(net.num_vertices(), 4);
  EXPECT_EQ(net.lambda_max(), 50.0);
  EXPECT_EQ(net.cap(net.topology().find_arc(0, 2)), AffineFn::linear(2, 3));

  ASSERT_EQ(run("generate agg --input " + fixture_path("two_faces.fg")), 0);
  EXPECT_NE(out().find("c lambda_max is the default"), std::string::npos);
}

TEST_F(Cli, GenerateRandom) {
  ASSERT_EQ(run("generate random --n 10 --seed 7 --out " + tmp("r.pmax")), 0);
  const ParametricNetwork net = parse_pmax(slurp(tmp("r.pmax")));
  EXPECT_EQ(net.num_vertices(), 10);
  EXPECT_TRUE(check_monotone(net).empty());
  EXPECT_EQ(run("generate random --n 2 --seed 7"), 1);
}

TEST_F(Cli, Bench) {
  ASSERT_EQ(run("bench --input " + fixture_path("f2.pmax") + " --algs pbfs,ds-ibfs --repeat 3"), 0);
  std::istringstream lines(out());
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "alg,time_ms,BP,Ad/BP,Loop/Init,Bot/BP,Dist,Vert,Contr%");
  int rows = 0;
  while (std::getline(lines, row)) {
    ++rows;
    std::istringstream fields(row);
    std::string alg, time, bp;
    std::getline(fields, alg, ',');
    std::getline(fields, time, ',');
    std::getline(fields, bp, ',');
    EXPECT_EQ(bp, "2") << alg;
  }
  EXPECT_EQ(rows, 2);
  EXPECT_EQ(run("bench --input " + fixture_path("f2.pmax") + " --algs pbfs,unknown"), 1);
}
