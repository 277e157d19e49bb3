#include <deque>

#include "pmc/maxflow.hpp"

namespace pmc {

SinkDistances sink_distances(const StaticNetwork& net, const StaticFlow& flow) {
  const VertexId n = net.num_vertices();
  SinkDistances out{std::vector<std::int32_t>(n, kInfDist), std::vector<ArcId>(n, kNoArc)};
  std::deque<VertexId> queue{net.sink()};
  out.dist[net.sink()] = 0;
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (ArcId e : net.out_arcs(x)) {
      const VertexId y = net.head(e);
      const ArcId a = net.rev(e);
      if (out.dist[y] != kInfDist || residual(net, flow, a) <= kEps) continue;
      out.dist[y] = out.dist[x] + 1;
      out.parent[y] = a;
      queue.push_back(y);
    }
  }
  return out;
}

VertexMask sink_component(const StaticNetwork& net, const StaticFlow& flow) {
  const SinkDistances d = sink_distances(net, flow);
  VertexMask mask(net.num_vertices());
  for (VertexId v = 0; v < net.num_vertices(); ++v) mask[v] = d.dist[v] != kInfDist;
  return mask;
}

double flow_value(const StaticNetwork& net, const StaticFlow& flow) {
  double value = 0.0;
  for (ArcId e : net.out_arcs(net.sink())) value -= flow.flow[e];
  return value;
}

}  // namespace pmc
