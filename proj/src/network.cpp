#include "pmc/network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace pmc {

namespace {

struct Entry {
  VertexId u;
  VertexId v;
  AffineFn cap;
};

void check_mask(const Topology& topo, const VertexMask& sink_side) {
  if (sink_side.size() != static_cast<std::size_t>(topo.num_vertices))
    throw NetworkError("vertex set has wrong size");
  if (sink_side[topo.source] || !sink_side[topo.sink])
    throw NetworkError("sink side must contain t and not s");
}

// Throws if t can be reached from s over infinite arcs alone.
void check_bounded(const Topology& topo, const std::vector<AffineFn>& caps) {
  std::vector<bool> seen(topo.num_vertices, false);
  std::deque<VertexId> queue{topo.source};
  seen[topo.source] = true;
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop_front();
    for (ArcId e : topo.out_arcs(u)) {
      const VertexId v = topo.head[e];
      if (!caps[e].infinite || seen[v]) continue;
      if (v == topo.sink) throw NetworkError("unbounded flow: s-t path of infinite arcs");
      seen[v] = true;
      queue.push_back(v);
    }
  }
}

}  // namespace

ArcId Topology::find_arc(VertexId u, VertexId v) const {
  const auto lo = head.begin() + first[u];
  const auto hi = head.begin() + first[u + 1];
  const auto it = std::lower_bound(lo, hi, v);
  if (it == hi || *it != v) return kNoArc;
  return static_cast<ArcId>(it - head.begin());
}

ParametricNetwork::ParametricNetwork(std::shared_ptr<const Topology> topo, std::vector<AffineFn> caps,
                                     double lambda_min, double lambda_max)
    : topo_(std::move(topo)), caps_(std::move(caps)), lambda_min_(lambda_min), lambda_max_(lambda_max) {}

NetworkSpec ParametricNetwork::to_spec() const {
  NetworkSpec spec;
  spec.num_vertices = num_vertices();
  spec.source = source();
  spec.sink = sink();
  spec.lambda_min = lambda_min_;
  spec.lambda_max = lambda_max_;
  spec.arcs.reserve(num_arcs());
  for (ArcId e = 0; e < num_arcs(); ++e) spec.arcs.push_back({tail(e), head(e), caps_[e]});
  return spec;
}

StaticNetwork::StaticNetwork(std::shared_ptr<const Topology> topo, std::vector<double> caps)
    : topo_(std::move(topo)), caps_(std::move(caps)) {}

ParametricNetwork normalize(const NetworkSpec& spec) {
  const VertexId n = spec.num_vertices;
  const VertexId s = spec.source;
  const VertexId t = spec.sink;
  if (n < 2) throw NetworkError("network needs at least two vertices");
  if (s < 0 || s >= n || t < 0 || t >= n) throw NetworkError("terminal id out of range");
  if (s == t) throw NetworkError("source and sink coincide");
  if (!std::isfinite(spec.lambda_min) || !std::isfinite(spec.lambda_max) || !(spec.lambda_min < spec.lambda_max))
    throw NetworkError("parameter interval must be finite and non-empty");

  std::vector<Entry> entries;
  entries.reserve(2 * spec.arcs.size() + 4 * static_cast<std::size_t>(n));
  for (const ArcSpec& a : spec.arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw NetworkError("arc endpoint out of range: " + std::to_string(a.tail) + " -> " + std::to_string(a.head));
    if (a.tail == a.head) continue;
    entries.push_back({a.tail, a.head, a.cap});
    entries.push_back({a.head, a.tail, AffineFn{}});
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    entries.push_back({s, v, AffineFn{}});
    entries.push_back({v, s, AffineFn{}});
    entries.push_back({v, t, AffineFn{}});
    entries.push_back({t, v, AffineFn{}});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });

  auto topo = std::make_shared<Topology>();
  topo->num_vertices = n;
  topo->source = s;
  topo->sink = t;
  topo->first.assign(n + 1, 0);
  std::vector<AffineFn> caps;
  for (std::size_t i = 0; i < entries.size();) {
    const Entry& e = entries[i];
    AffineFn sum;
    std::size_t j = i;
    for (; j < entries.size() && entries[j].u == e.u && entries[j].v == e.v; ++j) sum += entries[j].cap;
    topo->tail.push_back(e.u);
    topo->head.push_back(e.v);
    caps.push_back(sum);
    ++topo->first[e.u + 1];
    i = j;
  }
  for (VertexId v = 0; v < n; ++v) topo->first[v + 1] += topo->first[v];
  topo->rev.resize(topo->head.size());
  for (ArcId e = 0; e < topo->num_arcs(); ++e) topo->rev[e] = topo->find_arc(topo->head[e], topo->tail[e]);

  check_bounded(*topo, caps);
  return ParametricNetwork(std::move(topo), std::move(caps), spec.lambda_min, spec.lambda_max);
}

const char* to_string(MonotoneRule rule) {
  switch (rule) {
    case MonotoneRule::SourceArcDecreasing: return "source arc decreasing";
    case MonotoneRule::SinkArcIncreasing: return "sink arc increasing";
    case MonotoneRule::InteriorArcNonConstant: return "interior arc non-constant";
    case MonotoneRule::NegativeCapacity: return "negative capacity";
  }
  return "unknown";
}

std::vector<MonotoneViolation> check_monotone(const ParametricNetwork& net) {
  std::vector<MonotoneViolation> out;
  const VertexId s = net.source();
  const VertexId t = net.sink();
  for (ArcId e = 0; e < net.num_arcs(); ++e) {
    const AffineFn& c = net.cap(e);
    if (c.infinite) continue;
    const VertexId u = net.tail(e);
    const VertexId v = net.head(e);
    if (u == s && v == t) {
      // in every cut, any slope is fine
    } else if (u == s) {
      if (c.slope < 0.0) out.push_back({e, MonotoneRule::SourceArcDecreasing});
    } else if (v == t) {
      if (c.slope > 0.0) out.push_back({e, MonotoneRule::SinkArcIncreasing});
    } else if (c.slope != 0.0) {
      out.push_back({e, MonotoneRule::InteriorArcNonConstant});
    }
    if (c(net.lambda_min()) < -kEps || c(net.lambda_max()) < -kEps)
      out.push_back({e, MonotoneRule::NegativeCapacity});
  }
  return out;
}

StaticNetwork evaluate_at(const ParametricNetwork& net, double lambda) {
  if (!(lambda >= net.lambda_min() - kEps && lambda <= net.lambda_max() + kEps))
    throw NetworkError("lambda outside parameter interval");
  std::vector<double> caps(net.num_arcs());
  for (ArcId e = 0; e < net.num_arcs(); ++e) caps[e] = std::max(0.0, net.cap(e)(lambda));
  return StaticNetwork(net.shared_topology(), std::move(caps));
}

AffineFn cut_capacity(const ParametricNetwork& net, const VertexMask& sink_side) {
  check_mask(net.topology(), sink_side);
  AffineFn sum;
  for (ArcId e = 0; e < net.num_arcs(); ++e)
    if (!sink_side[net.tail(e)] && sink_side[net.head(e)]) sum += net.cap(e);
  return sum;
}

double cut_capacity(const StaticNetwork& net, const VertexMask& sink_side) {
  check_mask(net.topology(), sink_side);
  double sum = 0.0;
  for (ArcId e = 0; e < net.num_arcs(); ++e)
    if (!sink_side[net.tail(e)] && sink_side[net.head(e)]) sum += net.cap(e);
  return sum;
}

Contraction contract_terminals(const ParametricNetwork& net, const VertexMask& to_source, const VertexMask& to_sink) {
  const VertexId n = net.num_vertices();
  const VertexId s = net.source();
  const VertexId t = net.sink();
  if (to_source.size() != static_cast<std::size_t>(n) || to_sink.size() != static_cast<std::size_t>(n))
    throw NetworkError("vertex set has wrong size");
  if (to_source[t]) throw NetworkError("cannot contract the sink into the source");
  if (to_sink[s]) throw NetworkError("cannot contract the source into the sink");

  std::vector<VertexId> map(n);
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (v == s || v == t || (!to_source[v] && !to_sink[v])) map[v] = next++;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    if (to_source[v] && to_sink[v]) throw NetworkError("vertex contracted into both terminals");
    if (to_source[v]) map[v] = map[s];
    else if (to_sink[v]) map[v] = map[t];
  }

  NetworkSpec spec;
  spec.num_vertices = next;
  spec.source = map[s];
  spec.sink = map[t];
  spec.lambda_min = net.lambda_min();
  spec.lambda_max = net.lambda_max();
  spec.arcs.reserve(net.num_arcs());
  for (ArcId e = 0; e < net.num_arcs(); ++e) {
    const VertexId u = map[net.tail(e)];
    const VertexId v = map[net.head(e)];
    if (u != v) spec.arcs.push_back({u, v, net.cap(e)});
  }
  return {normalize(spec), std::move(map)};
}

Contraction contract_source_set(const ParametricNetwork& net, const VertexMask& merged) {
  return contract_terminals(net, merged, VertexMask(net.num_vertices(), false));
}

Contraction contract_sink_set(const ParametricNetwork& net, const VertexMask& merged) {
  return contract_terminals(net, VertexMask(net.num_vertices(), false), merged);
}

VertexMask BreakpointFunction::sink_side(double lambda) const {
  VertexMask mask(beta.size());
  for (std::size_t v = 0; v < beta.size(); ++v) mask[v] = beta[v] > lambda;
  return mask;
}

std::size_t count_breakpoints(const BreakpointFunction& bp, double lambda_min) {
  std::vector<double> values;
  for (double b : bp.beta)
    if (std::isfinite(b) && b > lambda_min) values.push_back(b);
  std::sort(values.begin(), values.end());
  std::size_t count = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i == 0 || values[i] - values[i - 1] > kEps) ++count;
  return count;
}

}  // namespace pmc
