#include <cmath>
#include <sstream>

#include "pmc/maxflow.hpp"
#include "pmc/pbfs.hpp"

namespace pmc {

void PbfsInvariantChecker::fail(const std::string& what) {
  std::ostringstream os;
  os << "iteration " << iterations_ << ": " << what;
  violations_.push_back(os.str());
}

void PbfsInvariantChecker::operator()(const ParametricBfs& solver) {
  const ParametricNetwork& net = solver.network();
  const VertexId n = net.num_vertices();
  const VertexId s = net.source();
  const VertexId t = net.sink();
  const double lambda = solver.lambda();

  if (iterations_ > 0 && !(lambda > last_lambda_)) fail("parameter did not increase");
  last_lambda_ = lambda;

  if (last_dist_.empty()) last_dist_.assign(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (solver.dist(v) < last_dist_[v]) fail("label of vertex " + std::to_string(v) + " decreased");
    last_dist_[v] = solver.dist(v);
  }

  if (solver.in_sink(s)) fail("source in sink component");
  if (!solver.in_sink(t) || solver.parent(t) != kNoArc) fail("sink lost its root role");

  std::vector<bool> tree_arc(net.num_arcs(), false);
  for (VertexId v = 0; v < n; ++v) {
    if (!solver.in_sink(v) || v == t) continue;
    const ArcId e = solver.parent(v);
    if (e == kNoArc) {
      fail("vertex " + std::to_string(v) + " has no tree arc");
      continue;
    }
    tree_arc[e] = true;
    const VertexId w = net.head(e);
    if (net.tail(e) != v || !solver.in_sink(w)) fail("tree arc of " + std::to_string(v) + " leaves the sink side");
    else if (solver.dist(v) != solver.dist(w) + 1) fail("tree arc of " + std::to_string(v) + " not admissible");
    if (!(net.cap(e)(lambda) - solver.flow(e)(lambda) > 0.0)) fail("tree arc of " + std::to_string(v) + " saturated");
    if (!(solver.root(e) > lambda)) fail("tree arc of " + std::to_string(v) + " has flow limit at or below lambda");
    if (!solver.in_queue(e) || solver.queue_key(e) != solver.root(e))
      fail("tree arc of " + std::to_string(v) + " missing from the queue");

    const AffineFn& ex = solver.excess(v);
    const double scale = std::max(1.0, std::abs(ex.slope * lambda) + std::abs(ex.intercept));
    if (std::abs(ex(lambda)) > 1e-6 * scale) fail("nonzero excess at vertex " + std::to_string(v));
  }
  for (ArcId e = 0; e < net.num_arcs(); ++e) {
    if (tree_arc[e]) continue;
    if (solver.root(e) != kInf || solver.in_queue(e)) fail("non-tree arc " + std::to_string(e) + " has a flow limit");
  }

  if (check_flow_) {
    const StaticNetwork g = evaluate_at(net, lambda);
    const double reference = solve_ek(g).value;
    const double value = solver.flow_value();
    VertexMask side(n);
    for (VertexId v = 0; v < n; ++v) side[v] = solver.in_sink(v);
    const double cut = cut_capacity(net, side)(lambda);
    ++flow_checks_;
    if (std::abs(value - reference) > flow_tol_) {
      std::ostringstream os;
      os << "flow value " << value << " differs from reference " << reference << " at lambda " << lambda;
      fail(os.str());
    }
    if (std::abs(cut - reference) > flow_tol_) {
      std::ostringstream os;
      os << "cut capacity " << cut << " differs from reference " << reference << " at lambda " << lambda;
      fail(os.str());
    }
  }
  ++iterations_;
}

void PbfsInvariantChecker::finish(const ParametricBfs& solver) {
  const ParametricNetwork& net = solver.network();
  const VertexId n = net.num_vertices();
  for (VertexId v = 0; v < n; ++v)
    if (solver.relabel_count(v) > n) fail("vertex " + std::to_string(v) + " relabeled more than n times");
  const auto bound = static_cast<std::size_t>(n) * static_cast<std::size_t>(net.num_arcs());
  if (solver.stats().tree_removals > bound) fail("tree-edge removals exceed n*m");
}

}  // namespace pmc
