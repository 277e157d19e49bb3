#include <gtest/gtest.h>

#include <functional>

#include "enum_oracle.hpp"
#include "fixtures.hpp"
#include "pmc/instances.hpp"
#include "pmc/pbfs.hpp"

using namespace pmc;
using namespace pmc::testing;

TEST(Pbfs, F1Initialization) {
  const ParametricNetwork f1 = load("f1.pmax");
  const Topology& topo = f1.topology();
  const ArcId sv = topo.find_arc(f1::s, f1::v);
  const ArcId vt = topo.find_arc(f1::v, f1::t);
  bool seen = false;
  ParametricBfs solver(f1);
  solver.run([&](const ParametricBfs& p) {
    if (seen) return;
    seen = true;
    EXPECT_EQ(p.flow(sv), AffineFn::linear(1, 0));
    EXPECT_EQ(p.flow(vt), AffineFn::linear(1, 0));
    EXPECT_DOUBLE_EQ(p.root(vt), 1.0);
    EXPECT_EQ(p.parent(f1::v), vt);
    EXPECT_TRUE(p.in_queue(vt));
    EXPECT_DOUBLE_EQ(p.queue_key(vt), 1.0);
  });
  EXPECT_TRUE(seen);
}

TEST(Pbfs, F2Initialization) {
  const ParametricNetwork f2 = load("f2.pmax");
  bool seen = false;
  ParametricBfs solver(f2);
  std::vector<double> lambdas;
  solver.run([&](const ParametricBfs& p) {
    lambdas.push_back(p.lambda());
    if (seen) return;
    seen = true;
    EXPECT_EQ(p.flow_value(), 0.0);
    EXPECT_TRUE(p.in_sink(f2::a));
    EXPECT_TRUE(p.in_sink(f2::b));
    EXPECT_TRUE(p.in_sink(f2::t));
    EXPECT_FALSE(p.in_sink(f2::s));
    EXPECT_EQ(p.dist(f2::a), 1);
    EXPECT_EQ(p.dist(f2::b), 1);
  });
  // first saturation is (b,t) at 1
  ASSERT_GE(lambdas.size(), 2u);
  EXPECT_DOUBLE_EQ(lambdas[1], 1.0);
}

TEST(Pbfs, FixtureBreakpoints) {
  PbfsResult r = run_pbfs(load("f1.pmax"));
  EXPECT_EQ(r.breakpoints.beta[f1::s], 0.0);
  EXPECT_EQ(r.breakpoints.beta[f1::t], kInf);
  EXPECT_NEAR(r.breakpoints.beta[f1::v], 1.0, 1e-9);
  EXPECT_EQ(r.stats.breakpoints, 1u);

  r = run_pbfs(load("f2.pmax"));
  EXPECT_NEAR(r.breakpoints.beta[f2::b], 1.0, 1e-9);
  EXPECT_NEAR(r.breakpoints.beta[f2::a], 1.5, 1e-9);
  EXPECT_EQ(r.breakpoints.beta[f2::t], kInf);
  EXPECT_EQ(r.stats.breakpoints, 2u);
}

TEST(Pbfs, ExhaustedInterval) {
  const PbfsResult r = run_pbfs(load("f1_short.pmax"));
  EXPECT_EQ(r.breakpoints.beta[f1::v], kInf);
  EXPECT_EQ(r.breakpoints.beta[f1::t], kInf);
  EXPECT_EQ(r.stats.breakpoints, 0u);
}

TEST(Pbfs, InfiniteSinkArc) {
  const ParametricNetwork net = load("inf_sink.pmax");
  const PbfsResult r = run_pbfs(net);
  const BreakpointFunction ref = enumerate_breakpoints(net);
  for (VertexId v = 0; v < net.num_vertices(); ++v)
    EXPECT_TRUE(beta_close(r.breakpoints.beta[v], ref.beta[v]))
          << r.breakpoints.beta[v] << " vs " << ref.beta[v] << ", vertex " << v;
  EXPECT_EQ(r.breakpoints.beta[1], kInf);
}

TEST(Pbfs, RejectsNonMonotone) {
  const ParametricNetwork net = normalize(NetworkSpec{3, 0, 1, 0, 1, {{2, 1, AffineFn::linear(1, 0)}}});
  EXPECT_THROW(ParametricBfs{net}, NetworkError);
}

TEST(Pbfs, MatchesEnumeration) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    RandomNetworkOptions opts;
    opts.num_vertices = 4 + static_cast<VertexId>(seed % 9);
    opts.parametric_sink = seed % 2 == 1;
    opts.infinite_sink_prob = seed % 5 == 0 ? 0.25 : 0.0;
    const ParametricNetwork net = normalize(random_monotone_spec(seed, opts));
    const BreakpointFunction ref = enumerate_breakpoints(net);
    const PbfsResult r = run_pbfs(net);
    for (VertexId v = 0; v < net.num_vertices(); ++v)
      ASSERT_TRUE(beta_close(r.breakpoints.beta[v], ref.beta[v]))
          << r.breakpoints.beta[v] << " vs " << ref.beta[v] << ", seed " << seed << ", vertex " << v;
  }
}

TEST(Pbfs, InvariantsHold) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    RandomNetworkOptions opts;
    opts.parametric_sink = seed % 2 == 0;
    const ParametricNetwork net = normalize(random_monotone_spec(seed, opts));
    PbfsInvariantChecker checker;
    ParametricBfs solver(net);
    solver.run(std::ref(checker));
    checker.finish(solver);
    EXPECT_GT(checker.iterations(), 0u);
    EXPECT_TRUE(checker.violations().empty())
        << "seed " << seed << ": " << (checker.violations().empty() ? "" : checker.violations().front());
  }
}

// Two vertices leave exactly at lambda_max = 4; the flow limit comes out a
// few ulps above it.
TEST(Pbfs, BreakpointAtIntervalEnd) {
  const ParametricNetwork net = normalize(random_monotone_spec(233));
  const PbfsResult r = run_pbfs(net);
  EXPECT_EQ(r.breakpoints.beta[23], 4.0);
  EXPECT_EQ(r.breakpoints.beta[34], 4.0);
}
