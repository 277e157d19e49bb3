#include <gtest/gtest.h>

#include <cmath>

#include "fixtures.hpp"
#include "pmc/network.hpp"

using namespace pmc;
using namespace pmc::testing;

namespace {

VertexMask mask(VertexId n, std::initializer_list<VertexId> members) {
  VertexMask m(n, false);
  for (VertexId v : members) m[v] = true;
  return m;
}

}  // namespace

TEST(Affine, SmallestRoot) {
  EXPECT_DOUBLE_EQ(smallest_root(AffineFn::linear(-1, 2), 0), 2.0);
  EXPECT_EQ(smallest_root(AffineFn::constant(3), 0), kInf);
  EXPECT_DOUBLE_EQ(smallest_root(AffineFn::linear(-2, 5), 1), 2.5);
  EXPECT_EQ(smallest_root(AffineFn::unbounded(), 0), kInf);
}

TEST(Affine, Intersection) {
  auto x = intersection_lambda(AffineFn::linear(3, 0), AffineFn::constant(4));
  ASSERT_TRUE(x.exists);
  EXPECT_DOUBLE_EQ(x.lambda, 4.0 / 3.0);
  x = intersection_lambda(AffineFn::linear(3, 0), AffineFn::linear(2, 1));
  ASSERT_TRUE(x.exists);
  EXPECT_DOUBLE_EQ(x.lambda, 1.0);
  EXPECT_FALSE(intersection_lambda(AffineFn::linear(2, 1), AffineFn::linear(2, 5)).exists);
}

TEST(Affine, InfiniteArithmetic) {
  const AffineFn inf = AffineFn::unbounded();
  EXPECT_TRUE((inf - AffineFn::linear(1, 1)).infinite);
  EXPECT_TRUE((AffineFn::constant(1) + inf).infinite);
  EXPECT_EQ(inf(3.0), kInf);
}

TEST(Normalize, SingleArcGetsPartners) {
  NetworkSpec spec{3, 0, 1, 0, 1, {{0, 2, AffineFn::linear(1, 0)}}};
  const ParametricNetwork net = normalize(spec);
  EXPECT_EQ(net.num_arcs(), 4);
  const Topology& topo = net.topology();
  EXPECT_NE(topo.find_arc(0, 2), kNoArc);
  EXPECT_NE(topo.find_arc(2, 0), kNoArc);
  EXPECT_NE(topo.find_arc(2, 1), kNoArc);
  EXPECT_NE(topo.find_arc(1, 2), kNoArc);
  for (ArcId e = 0; e < net.num_arcs(); ++e) EXPECT_EQ(net.rev(net.rev(e)), e);
}

TEST(Normalize, Idempotent) {
  const ParametricNetwork f1 = load("f1.pmax");
  EXPECT_EQ(f1.num_arcs(), 4);
  const ParametricNetwork again = normalize(f1);
  EXPECT_EQ(again.num_arcs(), f1.num_arcs());
  for (ArcId e = 0; e < f1.num_arcs(); ++e) EXPECT_EQ(again.cap(e), f1.cap(e));
}

TEST(Normalize, MergesParallelArcs) {
  NetworkSpec spec{4, 0, 1, 0, 1, {{2, 3, AffineFn::linear(1, 1)}, {2, 3, AffineFn::constant(2)}}};
  const ParametricNetwork net = normalize(spec);
  const ArcId e = net.topology().find_arc(2, 3);
  ASSERT_NE(e, kNoArc);
  EXPECT_EQ(net.cap(e), AffineFn::linear(1, 3));
}

TEST(Normalize, DropsSelfLoopsAndRejectsBadInput) {
  NetworkSpec spec{3, 0, 1, 0, 1, {{2, 2, AffineFn::constant(5)}}};
  EXPECT_EQ(normalize(spec).num_arcs(), 4);
  EXPECT_THROW(normalize(NetworkSpec{3, 0, 0, 0, 1, {}}), NetworkError);
  EXPECT_THROW(normalize(NetworkSpec{3, 0, 1, 2, 1, {}}), NetworkError);
  EXPECT_THROW(normalize(NetworkSpec{3, 0, 1, 0, 1, {{0, 7, AffineFn::constant(1)}}}), NetworkError);
  EXPECT_THROW(normalize(NetworkSpec{3, 0, 1, 0, 1, {{0, 2, AffineFn::unbounded()}, {2, 1, AffineFn::unbounded()}}}),
               NetworkError);
}

TEST(Monotone, Rules) {
  EXPECT_TRUE(check_monotone(load("f1.pmax")).empty());

  auto violations = check_monotone(normalize(NetworkSpec{3, 0, 1, 0, 1, {{2, 1, AffineFn::linear(1, 0)}}}));
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, MonotoneRule::SinkArcIncreasing);

  violations = check_monotone(normalize(NetworkSpec{4, 0, 1, 0, 1, {{2, 3, AffineFn::linear(0.5, 1)}}}));
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].rule, MonotoneRule::InteriorArcNonConstant);

  violations = check_monotone(normalize(NetworkSpec{3, 0, 1, 0, 1, {{0, 2, AffineFn::linear(-1, 0.5)}}}));
  bool negative = false;
  for (const auto& v : violations) negative = negative || v.rule == MonotoneRule::NegativeCapacity;
  EXPECT_TRUE(negative);
}

TEST(Evaluate, F1) {
  const ParametricNetwork f1 = load("f1.pmax");
  const Topology& topo = f1.topology();
  StaticNetwork g = evaluate_at(f1, 0.0);
  EXPECT_EQ(g.cap(topo.find_arc(f1::s, f1::v)), 0.0);
  EXPECT_EQ(g.cap(topo.find_arc(f1::v, f1::t)), 1.0);
  g = evaluate_at(f1, 0.5);
  EXPECT_EQ(g.cap(topo.find_arc(f1::s, f1::v)), 0.5);
  EXPECT_THROW(evaluate_at(f1, 3.0), NetworkError);
}

TEST(Evaluate, InfiniteArc) {
  const ParametricNetwork net = load("inf_sink.pmax");
  const StaticNetwork g = evaluate_at(net, 3.0);
  EXPECT_EQ(g.cap(net.topology().find_arc(1, 3)), kInf);
}

TEST(CutCapacity, Fixtures) {
  const ParametricNetwork f1 = load("f1.pmax");
  EXPECT_EQ(cut_capacity(f1, mask(3, {f1::v, f1::t})), AffineFn::linear(1, 0));
  EXPECT_EQ(cut_capacity(f1, mask(3, {f1::t})), AffineFn::constant(1));
  const ParametricNetwork f2 = load("f2.pmax");
  EXPECT_EQ(cut_capacity(f2, mask(4, {f2::a, f2::b, f2::t})), AffineFn::linear(3, 0));
  EXPECT_THROW(cut_capacity(f2, mask(4, {f2::a})), NetworkError);
  EXPECT_THROW(cut_capacity(f2, mask(4, {f2::s, f2::t})), NetworkError);
}

TEST(Contraction, F2ByB) {
  const ParametricNetwork f2 = load("f2.pmax");
  const Contraction c = contract_source_set(f2, mask(4, {f2::b}));
  const ParametricNetwork& g = c.network;
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(c.vertex_map[f2::b], g.source());
  const VertexId a = c.vertex_map[f2::a];
  const Topology& topo = g.topology();
  EXPECT_EQ(g.cap(topo.find_arc(g.source(), a)), AffineFn::linear(2, 0));
  EXPECT_EQ(g.cap(topo.find_arc(g.source(), g.sink())), AffineFn::constant(1));
  EXPECT_EQ(g.cap(topo.find_arc(a, g.source())), AffineFn::constant(1));
}

TEST(Contraction, EmptyIsIdentity) {
  const ParametricNetwork f2 = load("f2.pmax");
  const Contraction c = contract_source_set(f2, VertexMask(4, false));
  ASSERT_EQ(c.network.num_arcs(), f2.num_arcs());
  for (ArcId e = 0; e < f2.num_arcs(); ++e) {
    EXPECT_EQ(c.network.tail(e), f2.tail(e));
    EXPECT_EQ(c.network.head(e), f2.head(e));
    EXPECT_EQ(c.network.cap(e), f2.cap(e));
  }
}

TEST(Contraction, F1ByV) {
  const ParametricNetwork f1 = load("f1.pmax");
  const Contraction c = contract_source_set(f1, mask(3, {f1::v}));
  const ParametricNetwork& g = c.network;
  EXPECT_EQ(g.num_vertices(), 2);
  EXPECT_EQ(g.cap(g.topology().find_arc(g.source(), g.sink())), AffineFn::constant(1));
  EXPECT_THROW(contract_source_set(f1, mask(3, {f1::t})), NetworkError);
  EXPECT_THROW(contract_sink_set(f1, mask(3, {f1::s})), NetworkError);
}

TEST(Contraction, PreservesCuts) {
  const ParametricNetwork f2 = load("f2.pmax");
  const VertexMask merged = mask(4, {f2::a});
  const Contraction c = contract_source_set(f2, merged);
  // sink sides disjoint from {a}: {t} and {b,t}
  for (auto side : {mask(4, {f2::t}), mask(4, {f2::b, f2::t})}) {
    VertexMask mapped(c.network.num_vertices(), false);
    for (VertexId v = 0; v < 4; ++v)
      if (side[v]) mapped[c.vertex_map[v]] = true;
    EXPECT_EQ(cut_capacity(c.network, mapped), cut_capacity(f2, side));
  }
}

TEST(Breakpoints, SinkSideAndCount) {
  BreakpointFunction bp{{0.0, kInf, 1.0, 1.5, 1.5 + 1e-12}};
  EXPECT_EQ(count_breakpoints(bp, 0.0), 2u);
  const VertexMask side = bp.sink_side(1.0);
  EXPECT_FALSE(side[0]);
  EXPECT_TRUE(side[1]);
  EXPECT_FALSE(side[2]);
  EXPECT_TRUE(side[3]);
}
