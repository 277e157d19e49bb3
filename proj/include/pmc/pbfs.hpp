#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <vector>

#include "pmc/arc_heap.hpp"
#include "pmc/maxflow.hpp"
#include "pmc/network.hpp"

namespace pmc {

struct PbfsStats {
  std::size_t breakpoints = 0;
  std::size_t iterations = 0;
  std::size_t adoptions = 0;
  std::size_t bottleneck_edges = 0;
  std::size_t tree_removals = 0;
  double adopted_distance_sum = 0.0;
  double init_ms = 0.0;
  double loop_ms = 0.0;
};

struct PbfsResult {
  BreakpointFunction breakpoints;
  PbfsStats stats;
};

/// Parametric BFS: sweeps the parameter interval once, maintaining affine
/// flow functions on a reverse shortest-path tree into t. Vertices that can
/// no longer reach t are contracted into s by flag.
class ParametricBfs {
 public:
  /// Called at the start of every iteration, including the first one
  /// right after initialization.
  using Observer = std::function<void(const ParametricBfs&)>;

  /// Throws NetworkError if the network is not monotone.
  explicit ParametricBfs(const ParametricNetwork& net);

  PbfsResult run(const Observer& observer = {});

  const ParametricNetwork& network() const { return net_; }
  double lambda() const { return lambda_; }
  const AffineFn& flow(ArcId e) const { return flow_[e]; }
  double root(ArcId e) const { return root_[e]; }
  const AffineFn& excess(VertexId v) const { return excess_[v]; }
  ArcId parent(VertexId v) const { return parent_[v]; }
  std::int32_t dist(VertexId v) const { return dist_[v]; }
  bool in_sink(VertexId v) const { return in_sink_[v]; }
  VertexId sink_count() const { return sink_count_; }
  std::int32_t relabel_count(VertexId v) const { return relabels_[v]; }
  bool in_queue(ArcId e) const { return heap_.contains(e); }
  double queue_key(ArcId e) const { return heap_.key(e); }
  const PbfsStats& stats() const { return stats_; }

  /// Net flow into t at the current parameter value.
  double flow_value() const;

 private:
  void initialize();
  void remove_tree_edge(ArcId e, double lambda);
  void reconnect_tree(double lambda);
  bool adopt_same_dist(VertexId u, double lambda);
  bool adopt_new_dist(VertexId u, double lambda);
  void drain_excess(double lambda);

  double residual(ArcId e, double lambda) const { return net_.cap(e)(lambda) - flow_[e](lambda); }
  void set_flow(ArcId e, const AffineFn& f);
  void link(VertexId u, ArcId e, double lambda);
  void mark_dirty(VertexId v);
  void level_insert(VertexId v);
  void level_erase(VertexId v);
  void contract(VertexId v, double lambda);
  void contract_above(std::int32_t gap, double lambda);

  const ParametricNetwork& net_;
  VertexId n_;
  double lambda_;
  std::vector<AffineFn> flow_;
  std::vector<double> root_;
  std::vector<AffineFn> excess_;
  std::vector<bool> dirty_;
  std::vector<VertexId> dirty_list_;
  std::vector<ArcId> parent_;
  std::vector<VertexId> first_child_;
  std::vector<VertexId> next_sibling_;
  std::vector<VertexId> prev_sibling_;
  std::vector<std::int32_t> dist_;
  std::vector<bool> in_sink_;
  VertexId sink_count_ = 0;
  std::vector<ArcId> current_;
  std::deque<VertexId> orphans_;
  std::vector<std::int32_t> relabels_;
  std::vector<std::vector<VertexId>> buckets_;
  // In-sink vertices grouped by label, for gap detection.
  std::vector<VertexId> level_head_;
  std::vector<VertexId> level_next_;
  std::vector<VertexId> level_prev_;
  std::vector<VertexId> level_size_;
  std::int32_t top_level_ = 0;
  ArcHeap heap_;
  std::vector<double> beta_;
  PbfsStats stats_;
};

/// Convenience wrapper around ParametricBfs.
PbfsResult run_pbfs(const ParametricNetwork& net, const ParametricBfs::Observer& observer = {});

/// Runtime checks of the solver's structural invariants, driven through the
/// observer hook. Violations are collected as text.
class PbfsInvariantChecker {
 public:
  /// With check_flow set, every iteration also compares the flow value with
  /// an Edmonds-Karp solve and the cut capacity of the current sink side.
  explicit PbfsInvariantChecker(bool check_flow = true, double flow_tol = 1e-6)
      : check_flow_(check_flow), flow_tol_(flow_tol) {}

  void operator()(const ParametricBfs& solver);

  /// Checks that need the whole run: label increase counts and the total
  /// number of tree-edge removals.
  void finish(const ParametricBfs& solver);

  const std::vector<std::string>& violations() const { return violations_; }
  std::size_t iterations() const { return iterations_; }
  std::size_t flow_checks() const { return flow_checks_; }

 private:
  void fail(const std::string& what);

  bool check_flow_;
  double flow_tol_;
  std::vector<std::int32_t> last_dist_;
  double last_lambda_ = 0.0;
  std::size_t iterations_ = 0;
  std::size_t flow_checks_ = 0;
  std::vector<std::string> violations_;
};

}  // namespace pmc
