#include "pmc/dichotomic.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <vector>

#include "pmc/maxflow.hpp"

namespace pmc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Subnetwork {
  ParametricNetwork net;
  std::vector<VertexId> orig;
};

// Interval [lo, hi] bracketed by the cuts with sink sides sink_lo at lo and
// sink_hi at hi, both given in the ids of `parent`.
struct Task {
  std::shared_ptr<const Subnetwork> parent;
  VertexMask sink_lo;
  VertexMask sink_hi;
  double lo;
  double hi;
  AffineFn cap_lo;
  AffineFn cap_hi;
  std::size_t depth;
};

}  // namespace

bool is_strictly_better(const AffineFn& candidate, const AffineFn& incumbent, double lambda, double epsilon) {
  return incumbent(lambda) > (1.0 + epsilon) * candidate(lambda) + kEps;
}

VertexMask min_cut_sink_side(const ParametricNetwork& net, double lambda, StaticSolver solver) {
  const StaticNetwork g = evaluate_at(net, lambda);
  const StaticFlow f = solver == StaticSolver::Ibfs ? solve_ibfs(g).flow : solve_prf(g);
  return sink_component(g, f);
}

DsResult ds_run(const ParametricNetwork& net, StaticSolver solver, double epsilon) {
  const auto violations = check_monotone(net);
  if (!violations.empty()) throw NetworkError(std::string("network is not monotone: ") + to_string(violations[0].rule));
  if (epsilon < 0.0) throw DsError("epsilon must be nonnegative");

  const VertexId n = net.num_vertices();
  const double lmin = net.lambda_min();
  const double lmax = net.lambda_max();
  DsResult out;
  DsStats& stats = out.stats;
  std::vector<double>& beta = out.breakpoints.beta;
  beta.assign(n, kInf);

  auto solve = [&](const ParametricNetwork& g, double lambda) {
    const auto t0 = Clock::now();
    VertexMask side = min_cut_sink_side(g, lambda, solver);
    stats.solve_ms += ms_since(t0);
    ++stats.solves;
    return side;
  };

  const VertexMask sink_lo = solve(net, lmin);
  const VertexMask sink_hi = solve(net, lmax);
  for (VertexId v = 0; v < n; ++v)
    if (!sink_lo[v]) beta[v] = lmin;

  auto root = std::make_shared<Subnetwork>(Subnetwork{net, {}});
  root->orig.resize(n);
  for (VertexId v = 0; v < n; ++v) root->orig[v] = v;

  // Sink-minimal cuts at lmin and lmax must nest; rounding can break this.
  VertexMask hi_nested(n);
  for (VertexId v = 0; v < n; ++v) hi_nested[v] = sink_hi[v] && sink_lo[v];

  std::vector<Task> stack;
  stack.push_back({root, sink_lo, hi_nested, lmin, lmax, cut_capacity(net, sink_lo), cut_capacity(net, hi_nested), 0});
  const std::size_t max_depth = 2 * static_cast<std::size_t>(n) + 64;

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    if (task.depth > max_depth) throw DsError("recursion depth limit exceeded");

    const ParametricNetwork& pnet = task.parent->net;
    const VertexId pn = pnet.num_vertices();
    bool middle = false;
    VertexMask to_source(pn);
    for (VertexId v = 0; v < pn; ++v) {
      to_source[v] = !task.sink_lo[v];
      middle = middle || (task.sink_lo[v] && !task.sink_hi[v]);
    }
    if (!middle) continue;

    const auto t0 = Clock::now();
    Contraction c = contract_terminals(pnet, to_source, task.sink_hi);
    auto sub = std::make_shared<Subnetwork>(Subnetwork{std::move(c.network), {}});
    sub->orig.assign(sub->net.num_vertices(), 0);
    for (VertexId v = 0; v < pn; ++v) sub->orig[c.vertex_map[v]] = task.parent->orig[v];
    stats.contraction_ms += ms_since(t0);
    stats.contracted_vertices += sub->net.num_vertices();

    const ParametricNetwork& h = sub->net;
    const VertexId hs = h.source();
    const VertexId ht = h.sink();
    auto assign_middle = [&](double lambda) {
      for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (v != hs && v != ht) beta[sub->orig[v]] = lambda;
    };

    const Intersection x = intersection_lambda(task.cap_lo, task.cap_hi);
    if (!x.exists || task.hi - task.lo <= kEps) {
      assign_middle(x.exists ? std::clamp(x.lambda, task.lo, task.hi) : task.lo);
      continue;
    }
    const double lm = std::clamp(x.lambda, task.lo, task.hi);
    if (lm - task.lo <= kEps || task.hi - lm <= kEps) {
      assign_middle(lm);
      continue;
    }

    const VertexMask side = solve(h, lm);
    std::size_t inside = 0;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
      if (v != hs && v != ht && side[v]) ++inside;
    const std::size_t total = h.num_vertices() - 2;
    const AffineFn cap_m = cut_capacity(h, side);
    if (inside == 0 || inside == total || !is_strictly_better(cap_m, task.cap_lo, lm, epsilon)) {
      assign_middle(lm);
      continue;
    }

    VertexMask all(h.num_vertices(), true);
    all[hs] = false;
    VertexMask only_t(h.num_vertices(), false);
    only_t[ht] = true;
    stack.push_back({sub, side, only_t, lm, task.hi, cap_m, task.cap_hi, task.depth + 1});
    stack.push_back({sub, std::move(all), side, task.lo, lm, task.cap_lo, cap_m, task.depth + 1});
  }

  beta[net.source()] = lmin;
  beta[net.sink()] = kInf;
  stats.breakpoints = count_breakpoints(out.breakpoints, lmin);
  return out;
}

}  // namespace pmc
