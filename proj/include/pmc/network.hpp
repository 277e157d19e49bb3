#pragma once

#include <cstdint>
#include <memory>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmc/affine.hpp"

namespace pmc {

using VertexId = std::int32_t;
using ArcId = std::int32_t;

inline constexpr ArcId kNoArc = -1;

/// Membership flags over the vertices of a network.
using VertexMask = std::vector<bool>;

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One declared arc, before normalization.
struct ArcSpec {
  VertexId tail = 0;
  VertexId head = 0;
  AffineFn cap;
};

/// A parametric network as declared: arcs may be unpaired, parallel, or
/// missing the terminal arcs that the solvers rely on. `normalize` turns it
/// into a ParametricNetwork.
struct NetworkSpec {
  VertexId num_vertices = 0;
  VertexId source = 0;
  VertexId sink = 1;
  double lambda_min = 0.0;
  double lambda_max = 1.0;
  std::vector<ArcSpec> arcs;
};

/// Arc structure shared by parametric and static networks.
///
/// Arcs are sorted by (tail, head); the outgoing arcs of v occupy the
/// contiguous id range [first[v], first[v+1]). Every arc has a reverse
/// partner and there are no parallel arcs or self-loops.
struct Topology {
  VertexId num_vertices = 0;
  VertexId source = 0;
  VertexId sink = 1;
  std::vector<ArcId> first;
  std::vector<VertexId> tail;
  std::vector<VertexId> head;
  std::vector<ArcId> rev;

  ArcId num_arcs() const { return static_cast<ArcId>(head.size()); }
  auto out_arcs(VertexId v) const { return std::views::iota(first[v], first[v + 1]); }
  ArcId find_arc(VertexId u, VertexId v) const;
};

/// Normalized monotone-capable parametric network. Immutable after
/// construction; the topology is shared with networks derived from it.
class ParametricNetwork {
 public:
  ParametricNetwork(std::shared_ptr<const Topology> topo, std::vector<AffineFn> caps, double lambda_min,
                    double lambda_max);

  VertexId num_vertices() const { return topo_->num_vertices; }
  ArcId num_arcs() const { return topo_->num_arcs(); }
  VertexId source() const { return topo_->source; }
  VertexId sink() const { return topo_->sink; }
  double lambda_min() const { return lambda_min_; }
  double lambda_max() const { return lambda_max_; }

  const Topology& topology() const { return *topo_; }
  const std::shared_ptr<const Topology>& shared_topology() const { return topo_; }

  VertexId tail(ArcId e) const { return topo_->tail[e]; }
  VertexId head(ArcId e) const { return topo_->head[e]; }
  ArcId rev(ArcId e) const { return topo_->rev[e]; }
  auto out_arcs(VertexId v) const { return topo_->out_arcs(v); }
  const AffineFn& cap(ArcId e) const { return caps_[e]; }
  std::span<const AffineFn> caps() const { return caps_; }

  /// Arcs as a declaration; normalize(to_spec()) reproduces this network.
  NetworkSpec to_spec() const;

 private:
  std::shared_ptr<const Topology> topo_;
  std::vector<AffineFn> caps_;
  double lambda_min_;
  double lambda_max_;
};

/// Network with capacities fixed at one parameter value. Infinite
/// capacities are stored as +inf.
class StaticNetwork {
 public:
  StaticNetwork(std::shared_ptr<const Topology> topo, std::vector<double> caps);

  VertexId num_vertices() const { return topo_->num_vertices; }
  ArcId num_arcs() const { return topo_->num_arcs(); }
  VertexId source() const { return topo_->source; }
  VertexId sink() const { return topo_->sink; }
  const Topology& topology() const { return *topo_; }

  VertexId tail(ArcId e) const { return topo_->tail[e]; }
  VertexId head(ArcId e) const { return topo_->head[e]; }
  ArcId rev(ArcId e) const { return topo_->rev[e]; }
  auto out_arcs(VertexId v) const { return topo_->out_arcs(v); }
  double cap(ArcId e) const { return caps_[e]; }

 private:
  std::shared_ptr<const Topology> topo_;
  std::vector<double> caps_;
};

/// Pairs every arc with a reverse arc, merges parallel arcs by summing their
/// coefficients, drops self-loops and adds zero-capacity (s,v) and (v,t) arcs
/// for every non-terminal vertex. Throws NetworkError on out-of-range ids,
/// s == t, an empty parameter interval, negative capacities at an interval
/// endpoint, or an s-t path made only of infinite arcs.
ParametricNetwork normalize(const NetworkSpec& spec);
inline ParametricNetwork normalize(const ParametricNetwork& net) { return normalize(net.to_spec()); }

enum class MonotoneRule {
  SourceArcDecreasing,
  SinkArcIncreasing,
  InteriorArcNonConstant,
  NegativeCapacity,
};

struct MonotoneViolation {
  ArcId arc = kNoArc;
  MonotoneRule rule = MonotoneRule::NegativeCapacity;
};

const char* to_string(MonotoneRule rule);

/// Empty result means the network is source-sink monotone. Arcs (s,t) are
/// exempt from the slope rules; they lie in every cut.
std::vector<MonotoneViolation> check_monotone(const ParametricNetwork& net);

/// Capacities at one parameter value. Throws NetworkError if lambda lies
/// outside the network's interval.
StaticNetwork evaluate_at(const ParametricNetwork& net, double lambda);

/// Sum of capacities of arcs leaving the complement of sink_side and entering
/// it. Throws NetworkError unless t is inside and s outside.
AffineFn cut_capacity(const ParametricNetwork& net, const VertexMask& sink_side);
double cut_capacity(const StaticNetwork& net, const VertexMask& sink_side);

/// Result of contracting vertices into a terminal: the new network and, for
/// every old vertex, its id in the new network.
struct Contraction {
  ParametricNetwork network;
  std::vector<VertexId> vertex_map;
};

/// Merges the vertices of `merged` into s. Throws NetworkError if t is in
/// the set.
Contraction contract_source_set(const ParametricNetwork& net, const VertexMask& merged);

/// Merges the vertices of `merged` into t. Throws NetworkError if s is in
/// the set.
Contraction contract_sink_set(const ParametricNetwork& net, const VertexMask& merged);

/// Merges `to_source` into s and `to_sink` into t in one rebuild.
Contraction contract_terminals(const ParametricNetwork& net, const VertexMask& to_source, const VertexMask& to_sink);

/// Per-vertex parameter value at which the vertex leaves the sink side of
/// the sink-minimal minimum cut; +inf for vertices that never leave it.
struct BreakpointFunction {
  std::vector<double> beta;

  /// Sink side {v : beta(v) > lambda}.
  VertexMask sink_side(double lambda) const;
};

/// Number of distinct finite breakpoint values strictly above lambda_min.
std::size_t count_breakpoints(const BreakpointFunction& bp, double lambda_min);

}  // namespace pmc
