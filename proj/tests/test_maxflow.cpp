#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "pmc/instances.hpp"
#include "pmc/maxflow.hpp"

using namespace pmc;
using namespace pmc::testing;

namespace {

void expect_valid_flow(const StaticNetwork& g, const StaticFlow& f) {
  std::vector<double> balance(g.num_vertices(), 0.0);
  for (ArcId e = 0; e < g.num_arcs(); ++e) {
    EXPECT_NEAR(f.flow[e], -f.flow[g.rev(e)], 1e-9);
    EXPECT_LE(f.flow[e], g.cap(e) + 1e-9);
    balance[g.head(e)] += f.flow[e] > 0 ? f.flow[e] : 0.0;
    balance[g.tail(e)] -= f.flow[e] > 0 ? f.flow[e] : 0.0;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (v != g.source() && v != g.sink()) EXPECT_NEAR(balance[v], 0.0, 1e-9) << "vertex " << v;
}

template <typename Solve>
void check_fixture_values(Solve solve) {
  const ParametricNetwork f1 = load("f1.pmax");
  const ParametricNetwork f2 = load("f2.pmax");
  EXPECT_NEAR(solve(evaluate_at(f1, 0.5)), 0.5, 1e-12);
  EXPECT_NEAR(solve(evaluate_at(f2, 0.0)), 0.0, 1e-12);
  EXPECT_NEAR(solve(evaluate_at(f2, 2.0)), 4.0, 1e-12);
  EXPECT_NEAR(solve(evaluate_at(f2, 1.2)), 3.4, 1e-12);
}

}  // namespace

TEST(Maxflow, IbfsFixtures) {
  check_fixture_values([](const StaticNetwork& g) {
    const IbfsResult r = solve_ibfs(g);
    expect_valid_flow(g, r.flow);
    return r.flow.value;
  });
}

TEST(Maxflow, PrfFixtures) {
  check_fixture_values([](const StaticNetwork& g) {
    const StaticFlow f = solve_prf(g);
    expect_valid_flow(g, f);
    return f.value;
  });
}

TEST(Maxflow, EkFixtures) {
  check_fixture_values([](const StaticNetwork& g) {
    const StaticFlow f = solve_ek(g);
    expect_valid_flow(g, f);
    return f.value;
  });
}

TEST(Maxflow, ZeroCapacity) {
  const StaticNetwork g = evaluate_at(normalize(NetworkSpec{4, 0, 1, 0, 1, {}}), 0.5);
  EXPECT_EQ(solve_ibfs(g).flow.value, 0.0);
  EXPECT_EQ(solve_prf(g).value, 0.0);
  EXPECT_EQ(solve_ek(g).value, 0.0);
}

TEST(Maxflow, SinkComponent) {
  const ParametricNetwork f1 = load("f1.pmax");
  StaticNetwork g = evaluate_at(f1, 0.5);
  VertexMask side = sink_component(g, solve_ek(g));
  EXPECT_TRUE(side[f1::v]);
  EXPECT_TRUE(side[f1::t]);
  EXPECT_FALSE(side[f1::s]);

  g = evaluate_at(f1, 1.5);
  side = sink_component(g, solve_ek(g));
  EXPECT_FALSE(side[f1::v]);
  EXPECT_TRUE(side[f1::t]);

  const ParametricNetwork f2 = load("f2.pmax");
  g = evaluate_at(f2, 1.2);
  side = sink_component(g, solve_prf(g));
  EXPECT_TRUE(side[f2::a]);
  EXPECT_FALSE(side[f2::b]);
  EXPECT_TRUE(side[f2::t]);
}

TEST(Maxflow, IbfsDistancesAreExact) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const ParametricNetwork net = normalize(random_monotone_spec(seed));
    const StaticNetwork g = evaluate_at(net, 2.0);
    const IbfsResult r = solve_ibfs(g);
    const SinkDistances ref = sink_distances(g, r.flow);
    EXPECT_EQ(r.sink.dist, ref.dist) << "seed " << seed;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (v == g.sink() || r.sink.dist[v] == kInfDist) continue;
      const ArcId e = r.sink.parent[v];
      ASSERT_NE(e, kNoArc);
      EXPECT_EQ(g.tail(e), v);
      EXPECT_EQ(r.sink.dist[g.head(e)] + 1, r.sink.dist[v]);
      EXPECT_GT(residual(g, r.flow, e), kEps);
    }
  }
}

TEST(Maxflow, InfiniteArcs) {
  const ParametricNetwork net = load("inf_sink.pmax");
  for (double lambda : {0.0, 1.0, 5.0, 10.0}) {
    const StaticNetwork g = evaluate_at(net, lambda);
    const double ek = solve_ek(g).value;
    EXPECT_NEAR(solve_ibfs(g).flow.value, ek, 1e-9);
    EXPECT_NEAR(solve_prf(g).value, ek, 1e-9);
  }
}

TEST(Maxflow, SolversAgreeOnRandomNetworks) {
  for (std::uint64_t seed = 100; seed < 300; ++seed) {
    RandomNetworkOptions opts;
    opts.parametric_sink = seed % 2 == 0;
    opts.infinite_sink_prob = seed % 3 == 0 ? 0.2 : 0.0;
    const ParametricNetwork net = normalize(random_monotone_spec(seed, opts));
    const StaticNetwork g = evaluate_at(net, 1.7);
    const StaticFlow ek = solve_ek(g);
    const IbfsResult ib = solve_ibfs(g);
    const StaticFlow pr = solve_prf(g);
    expect_valid_flow(g, ib.flow);
    expect_valid_flow(g, pr);
    EXPECT_NEAR(ib.flow.value, ek.value, 1e-9) << "seed " << seed;
    EXPECT_NEAR(pr.value, ek.value, 1e-9) << "seed " << seed;
    EXPECT_EQ(sink_component(g, ib.flow), sink_component(g, ek)) << "seed " << seed;
    EXPECT_EQ(sink_component(g, pr), sink_component(g, ek)) << "seed " << seed;
  }
}

// Orphans used to hop between the two trees here without terminating.
TEST(Maxflow, IbfsNoLivelock) {
  const StaticNetwork g = evaluate_at(load("ibfs_livelock.max"), 0.0);
  const IbfsResult r = solve_ibfs(g);
  expect_valid_flow(g, r.flow);
  EXPECT_NEAR(r.flow.value, solve_ek(g).value, 1e-9);
}
