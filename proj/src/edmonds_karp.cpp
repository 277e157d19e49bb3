#include <algorithm>
#include <cmath>
#include <deque>

#include "pmc/maxflow.hpp"

namespace pmc {

StaticFlow solve_ek(const StaticNetwork& net) {
  const VertexId n = net.num_vertices();
  const VertexId s = net.source();
  const VertexId t = net.sink();
  StaticFlow f{std::vector<double>(net.num_arcs(), 0.0), 0.0};
  std::vector<ArcId> pred(n);
  std::deque<VertexId> queue;

  while (true) {
    std::fill(pred.begin(), pred.end(), kNoArc);
    queue.assign(1, s);
    bool found = false;
    while (!queue.empty() && !found) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (ArcId e : net.out_arcs(u)) {
        const VertexId v = net.head(e);
        if (v == s || pred[v] != kNoArc || residual(net, f, e) <= kEps) continue;
        pred[v] = e;
        if (v == t) {
          found = true;
          break;
        }
        queue.push_back(v);
      }
    }
    if (!found) break;

    double bottleneck = kInf;
    for (VertexId v = t; v != s; v = net.tail(pred[v])) bottleneck = std::min(bottleneck, residual(net, f, pred[v]));
    if (std::isinf(bottleneck)) throw MaxflowError("augmenting path of infinite capacity");
    for (VertexId v = t; v != s; v = net.tail(pred[v])) {
      f.flow[pred[v]] += bottleneck;
      f.flow[net.rev(pred[v])] -= bottleneck;
    }
  }
  f.value = flow_value(net, f);
  return f;
}

}  // namespace pmc
