#include "pmc/pbfs.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace pmc {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

ParametricBfs::ParametricBfs(const ParametricNetwork& net)
    : net_(net),
      n_(net.num_vertices()),
      lambda_(net.lambda_min()),
      flow_(net.num_arcs()),
      root_(net.num_arcs(), kInf),
      excess_(n_),
      dirty_(n_, false),
      parent_(n_, kNoArc),
      first_child_(n_, -1),
      next_sibling_(n_, -1),
      prev_sibling_(n_, -1),
      dist_(n_, kInfDist),
      in_sink_(n_, false),
      current_(n_, 0),
      relabels_(n_, 0),
      buckets_(n_),
      level_head_(n_ + 1, -1),
      level_next_(n_, -1),
      level_prev_(n_, -1),
      level_size_(n_ + 1, 0),
      heap_(net.num_arcs()),
      beta_(n_, kInf) {
  const auto violations = check_monotone(net);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw NetworkError(std::string("network is not monotone: ") + to_string(v.rule) + " on arc " +
                       std::to_string(net.tail(v.arc)) + " -> " + std::to_string(net.head(v.arc)));
  }
}

void ParametricBfs::set_flow(ArcId e, const AffineFn& f) {
  flow_[e] = f;
  flow_[net_.rev(e)] = -f;
}

void ParametricBfs::mark_dirty(VertexId v) {
  if (v == net_.sink() || dirty_[v]) return;
  dirty_[v] = true;
  dirty_list_.push_back(v);
}

void ParametricBfs::level_insert(VertexId v) {
  const std::int32_t d = dist_[v];
  level_prev_[v] = -1;
  level_next_[v] = level_head_[d];
  if (level_head_[d] >= 0) level_prev_[level_head_[d]] = v;
  level_head_[d] = v;
  ++level_size_[d];
  top_level_ = std::max(top_level_, d);
}

void ParametricBfs::level_erase(VertexId v) {
  const std::int32_t d = dist_[v];
  if (level_prev_[v] >= 0) level_next_[level_prev_[v]] = level_next_[v];
  else level_head_[d] = level_next_[v];
  if (level_next_[v] >= 0) level_prev_[level_next_[v]] = level_prev_[v];
  --level_size_[d];
}

void ParametricBfs::link(VertexId u, ArcId e, double lambda) {
  const VertexId p = net_.head(e);
  parent_[u] = e;
  prev_sibling_[u] = -1;
  next_sibling_[u] = first_child_[p];
  if (first_child_[p] >= 0) prev_sibling_[first_child_[p]] = u;
  first_child_[p] = u;
  root_[e] = smallest_root(net_.cap(e) - flow_[e], lambda);
  heap_.set(e, root_[e]);
}

void ParametricBfs::initialize() {
  const VertexId s = net_.source();
  const VertexId t = net_.sink();
  const double lo = net_.lambda_min();
  const StaticNetwork g = evaluate_at(net_, lo);
  const IbfsResult r = solve_ibfs(g);

  for (ArcId e = 0; e < net_.num_arcs(); ++e) flow_[e] = AffineFn::constant(r.flow.flow[e]);
  for (VertexId v = 0; v < n_; ++v) {
    if (v != t && r.sink.dist[v] == kInfDist) {
      beta_[v] = lo;
      continue;
    }
    in_sink_[v] = true;
    dist_[v] = r.sink.dist[v];
    level_insert(v);
    ++sink_count_;
  }

  // Saturated terminal arcs follow their capacity functions from here on.
  for (ArcId e : net_.out_arcs(s)) {
    if (pmc::residual(g, r.flow, e) > kEps) continue;
    const AffineFn f = net_.cap(e);
    excess_[net_.head(e)] += f - flow_[e];
    set_flow(e, f);
  }
  for (ArcId a : net_.out_arcs(t)) {
    const ArcId e = net_.rev(a);
    const VertexId v = net_.tail(e);
    if (v == s || pmc::residual(g, r.flow, e) > kEps) continue;
    const AffineFn f = net_.cap(e);
    excess_[v] += flow_[e] - f;
    set_flow(e, f);
  }

  for (VertexId v = 0; v < n_; ++v) {
    if (!in_sink_[v] || v == t) continue;
    current_[v] = r.sink.parent[v];
    link(v, r.sink.parent[v], lo);
    mark_dirty(v);
  }
  drain_excess(lo);
}

void ParametricBfs::remove_tree_edge(ArcId e, double lambda) {
  const VertexId u = net_.tail(e);
  const VertexId v = net_.head(e);
  const AffineFn& c = net_.cap(e);
  const double slope = c.infinite ? 0.0 : c.slope;
  const AffineFn f_new = AffineFn::linear(slope, flow_[e](lambda) - slope * lambda);
  const AffineFn delta = flow_[e] - f_new;
  set_flow(e, f_new);
  excess_[u] += delta;
  if (v != net_.sink()) excess_[v] -= delta;

  if (prev_sibling_[u] >= 0) next_sibling_[prev_sibling_[u]] = next_sibling_[u];
  else first_child_[v] = next_sibling_[u];
  if (next_sibling_[u] >= 0) prev_sibling_[next_sibling_[u]] = prev_sibling_[u];
  parent_[u] = kNoArc;
  root_[e] = kInf;
  heap_.erase(e);

  orphans_.push_back(u);
  mark_dirty(u);
  mark_dirty(v);
  ++stats_.tree_removals;
}

bool ParametricBfs::adopt_same_dist(VertexId u, double lambda) {
  const ArcId end = net_.topology().first[u + 1];
  for (ArcId e = current_[u]; e < end; ++e) {
    const VertexId v = net_.head(e);
    if (in_sink_[v] && dist_[v] + 1 == dist_[u] && residual(e, lambda) > kEps) {
      current_[u] = e;
      link(u, e, lambda);
      return true;
    }
  }
  current_[u] = end;
  return false;
}

bool ParametricBfs::adopt_new_dist(VertexId u, double lambda) {
  ArcId best = kNoArc;
  for (ArcId e : net_.out_arcs(u)) {
    const VertexId v = net_.head(e);
    if (!in_sink_[v] || residual(e, lambda) <= kEps) continue;
    if (best == kNoArc || dist_[v] < dist_[net_.head(best)]) best = e;
  }
  if (best == kNoArc || dist_[net_.head(best)] >= sink_count_ - 1) return false;
  const std::int32_t d = dist_[net_.head(best)] + 1;
  if (d != dist_[u]) {
    // Labels are lower bounds on the residual distance to t, so an emptied
    // level cuts off everything above it.
    if (level_size_[dist_[u]] == 1) return false;
    ++relabels_[u];
    level_erase(u);
    dist_[u] = d;
    level_insert(u);
  }
  current_[u] = best;
  link(u, best, lambda);
  return true;
}

void ParametricBfs::contract(VertexId u, double lambda) {
  level_erase(u);
  in_sink_[u] = false;
  --sink_count_;
  dist_[u] = kInfDist;
  beta_[u] = lambda;
}

void ParametricBfs::contract_above(std::int32_t gap, double lambda) {
  for (std::int32_t d = top_level_; d > gap; --d) {
    while (level_head_[d] >= 0) {
      const VertexId v = level_head_[d];
      if (parent_[v] != kNoArc) remove_tree_edge(parent_[v], lambda);
      contract(v, lambda);
    }
  }
  top_level_ = gap;
}

void ParametricBfs::reconnect_tree(double lambda) {
  std::vector<VertexId> children;
  while (!orphans_.empty()) {
    const VertexId u = orphans_.front();
    orphans_.pop_front();
    if (!in_sink_[u] || parent_[u] != kNoArc) continue;
    if (adopt_same_dist(u, lambda)) {
      ++stats_.adoptions;
      stats_.adopted_distance_sum += dist_[u];
      continue;
    }
    children.clear();
    for (VertexId c = first_child_[u]; c >= 0; c = next_sibling_[c]) children.push_back(c);
    for (VertexId c : children) remove_tree_edge(parent_[c], lambda);
    if (adopt_new_dist(u, lambda)) {
      ++stats_.adoptions;
      stats_.adopted_distance_sum += dist_[u];
      continue;
    }
    const std::int32_t d = dist_[u];
    contract(u, lambda);
    if (level_size_[d] == 0) contract_above(d, lambda);
  }
}

void ParametricBfs::drain_excess(double lambda) {
  const VertexId t = net_.sink();
  std::int32_t top = -1;
  for (VertexId v : dirty_list_) {
    if (!in_sink_[v]) {
      dirty_[v] = false;
      continue;
    }
    buckets_[dist_[v]].push_back(v);
    top = std::max(top, dist_[v]);
  }
  dirty_list_.clear();

  for (std::int32_t b = top; b >= 1; --b) {
    auto& bucket = buckets_[b];
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      const VertexId u = bucket[i];
      dirty_[u] = false;
      const ArcId e = parent_[u];
      const VertexId p = net_.head(e);
      if (!excess_[u].is_zero()) {
        set_flow(e, flow_[e] + excess_[u]);
        if (p != t) {
          excess_[p] += excess_[u];
          if (!dirty_[p]) {
            dirty_[p] = true;
            buckets_[dist_[p]].push_back(p);
          }
        }
        excess_[u] = AffineFn{};
      }
      root_[e] = smallest_root(net_.cap(e) - flow_[e], lambda);
      heap_.set(e, root_[e]);
    }
    bucket.clear();
  }
}

double ParametricBfs::flow_value() const {
  double value = 0.0;
  for (ArcId e : net_.out_arcs(net_.sink())) value -= flow_[e](lambda_);
  return value;
}

PbfsResult ParametricBfs::run(const Observer& observer) {
  const auto t0 = std::chrono::steady_clock::now();
  initialize();
  stats_.init_ms = elapsed_ms(t0);

  const auto t1 = std::chrono::steady_clock::now();
  while (true) {
    if (observer) observer(*this);
    if (heap_.empty() || lambda_ >= net_.lambda_max()) break;
    // Roots within EPS of lambda_max are rounding noise and taken at the end.
    const double next = std::min(heap_.top_key(), net_.lambda_max());
    if (heap_.top_key() > net_.lambda_max() + kEps) break;
    ++stats_.iterations;
    while (!heap_.empty() && heap_.top_key() <= next + kEps) {
      const ArcId e = heap_.pop();
      ++stats_.bottleneck_edges;
      remove_tree_edge(e, next);
    }
    reconnect_tree(next);
    drain_excess(next);
    lambda_ = next;
  }
  stats_.loop_ms = elapsed_ms(t1);

  beta_[net_.source()] = net_.lambda_min();
  beta_[net_.sink()] = kInf;
  PbfsResult out{BreakpointFunction{beta_}, stats_};
  out.stats.breakpoints = count_breakpoints(out.breakpoints, net_.lambda_min());
  stats_.breakpoints = out.stats.breakpoints;
  return out;
}

PbfsResult run_pbfs(const ParametricNetwork& net, const ParametricBfs::Observer& observer) {
  return ParametricBfs(net).run(observer);
}

}  // namespace pmc
