#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "pmc/network.hpp"

namespace pmc {

class MaxflowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-arc flow with flow(e) = -flow(rev(e)), plus the flow value into t.
struct StaticFlow {
  std::vector<double> flow;
  double value = 0.0;
};

inline constexpr std::int32_t kInfDist = std::numeric_limits<std::int32_t>::max();

/// Exact residual distances to t and a reverse shortest-path tree. Vertices
/// outside the sink component have dist kInfDist and parent kNoArc; the
/// parent of v is an arc leaving v.
struct SinkDistances {
  std::vector<std::int32_t> dist;
  std::vector<ArcId> parent;
};

struct IbfsResult {
  StaticFlow flow;
  SinkDistances sink;
};

/// Residual capacity of e under the flow; +inf for infinite arcs.
inline double residual(const StaticNetwork& net, const StaticFlow& f, ArcId e) { return net.cap(e) - f.flow[e]; }

/// Bidirectional search-tree max-flow solver. Throws MaxflowError if it
/// finds an augmenting path of infinite capacity.
IbfsResult solve_ibfs(const StaticNetwork& net);

/// Highest-label push-relabel with gap and global relabeling. The
/// remaining preflow excess is returned to s so the result is a flow.
StaticFlow solve_prf(const StaticNetwork& net);

/// Shortest augmenting paths, arcs scanned in id order.
StaticFlow solve_ek(const StaticNetwork& net);

/// Vertices with a residual path to t (residual > kEps).
VertexMask sink_component(const StaticNetwork& net, const StaticFlow& flow);

/// Reverse BFS from t over residual arcs; ties go to the lowest arc id.
SinkDistances sink_distances(const StaticNetwork& net, const StaticFlow& flow);

/// Net flow into t.
double flow_value(const StaticNetwork& net, const StaticFlow& flow);

}  // namespace pmc
