// Highest-label push-relabel. Phase one computes a maximum preflow; phase
// two sends the excess stranded behind the cut back to s.

#include <algorithm>
#include <cmath>
#include <deque>

#include "pmc/maxflow.hpp"

namespace pmc {

namespace {

class PushRelabel {
 public:
  explicit PushRelabel(const StaticNetwork& net)
      : net_(net),
        n_(net.num_vertices()),
        flow_(net.num_arcs(), 0.0),
        excess_(n_, 0.0),
        label_(n_, 0),
        current_(n_, 0),
        active_(2 * n_ + 1),
        level_(2 * n_ + 1),
        level_pos_(n_, 0) {}

  StaticFlow run() {
    phase_one();
    phase_two();
    StaticFlow out{std::move(flow_), 0.0};
    out.value = flow_value(net_, out);
    return out;
  }

 private:
  double res(ArcId e) const { return net_.cap(e) - flow_[e]; }

  void push(ArcId e, double amount) {
    flow_[e] += amount;
    flow_[net_.rev(e)] -= amount;
    excess_[net_.tail(e)] -= amount;
    excess_[net_.head(e)] += amount;
  }

  bool is_inner(VertexId v) const { return v != net_.source() && v != net_.sink(); }

  // Upper bound on the flow value: finite capacity leaving the set that s
  // reaches over infinite arcs.
  double flow_bound() const {
    std::vector<bool> seen(n_, false);
    std::deque<VertexId> queue{net_.source()};
    seen[net_.source()] = true;
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      for (ArcId e : net_.out_arcs(u)) {
        const VertexId v = net_.head(e);
        if (std::isinf(net_.cap(e)) && !seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    double bound = 0.0;
    for (ArcId e = 0; e < net_.num_arcs(); ++e)
      if (seen[net_.tail(e)] && !seen[net_.head(e)]) bound += net_.cap(e);
    return bound;
  }

  void add_level(VertexId v) {
    level_pos_[v] = level_[label_[v]].size();
    level_[label_[v]].push_back(v);
  }

  void remove_level(VertexId v) {
    auto& bucket = level_[label_[v]];
    const VertexId last = bucket.back();
    bucket[level_pos_[v]] = last;
    level_pos_[last] = level_pos_[v];
    bucket.pop_back();
  }

  void activate(VertexId v) {
    active_[label_[v]].push_back(v);
    max_active_ = std::max(max_active_, label_[v]);
  }

  // Exact labels from a reverse BFS from t; unreachable vertices get n.
  void global_relabel() {
    for (auto& b : level_) b.clear();
    for (auto& b : active_) b.clear();
    std::fill(label_.begin(), label_.end(), n_);
    label_[net_.sink()] = 0;
    std::deque<VertexId> queue{net_.sink()};
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (ArcId e : net_.out_arcs(x)) {
        const VertexId y = net_.head(e);
        if (label_[y] != n_ || y == net_.sink() || y == net_.source() || res(net_.rev(e)) <= kEps) continue;
        label_[y] = label_[x] + 1;
        queue.push_back(y);
      }
    }
    max_active_ = 0;
    max_level_ = 0;
    for (VertexId v = 0; v < n_; ++v) {
      current_[v] = net_.topology().first[v];
      if (!is_inner(v) || label_[v] >= n_) continue;
      add_level(v);
      max_level_ = std::max(max_level_, label_[v]);
      if (excess_[v] > kEps) activate(v);
    }
    relabels_since_global_ = 0;
  }

  void phase_one() {
    const VertexId s = net_.source();
    const double bound = flow_bound();
    for (ArcId e : net_.out_arcs(s)) {
      const double amount = std::isinf(net_.cap(e)) ? bound : net_.cap(e);
      if (amount > 0.0) push(e, amount);
    }
    global_relabel();

    while (true) {
      while (max_active_ > 0 && active_[max_active_].empty()) --max_active_;
      if (active_[max_active_].empty()) break;
      const VertexId v = active_[max_active_].back();
      active_[max_active_].pop_back();
      if (label_[v] != max_active_ || label_[v] >= n_) continue;
      discharge(v);
      if (relabels_since_global_ >= n_) global_relabel();
    }
  }

  void discharge(VertexId v) {
    const ArcId end = net_.topology().first[v + 1];
    while (excess_[v] > kEps) {
      ArcId& e = current_[v];
      for (; e < end && excess_[v] > kEps; ++e) {
        const VertexId w = net_.head(e);
        if (res(e) <= kEps || label_[v] != label_[w] + 1) continue;
        const bool was_active = excess_[w] > kEps;
        push(e, std::min(excess_[v], res(e)));
        if (!was_active && excess_[w] > kEps && is_inner(w)) activate(w);
        if (excess_[v] <= kEps) return;
      }
      if (!relabel(v)) return;
    }
  }

  // Returns false once v is cut off from t.
  bool relabel(VertexId v) {
    ++relabels_since_global_;
    const std::int32_t old = label_[v];
    remove_level(v);
    if (level_[old].empty()) {
      gap(old);
      label_[v] = n_;
      return false;
    }
    std::int32_t best = n_;
    ArcId best_arc = net_.topology().first[v];
    for (ArcId e : net_.out_arcs(v)) {
      if (res(e) <= kEps) continue;
      const std::int32_t d = label_[net_.head(e)] + 1;
      if (d < best) {
        best = d;
        best_arc = e;
      }
    }
    label_[v] = best;
    current_[v] = best_arc;
    if (best >= n_) return false;
    add_level(v);
    max_level_ = std::max(max_level_, best);
    return true;
  }

  // No inner vertex has label `gap_label` any more; everything above it is
  // cut off from t.
  void gap(std::int32_t gap_label) {
    for (std::int32_t d = gap_label + 1; d <= max_level_; ++d) {
      for (VertexId u : level_[d]) label_[u] = n_;
      level_[d].clear();
    }
    max_level_ = gap_label - 1;
  }

  // Labels become distances to s; excess flows back along them.
  void phase_two() {
    const VertexId s = net_.source();
    std::vector<std::int32_t> dist(n_, kInfDist);
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      const VertexId x = queue.front();
      queue.pop_front();
      for (ArcId e : net_.out_arcs(x)) {
        const VertexId y = net_.head(e);
        if (dist[y] != kInfDist || y == net_.sink() || res(net_.rev(e)) <= kEps) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }

    std::deque<VertexId> work;
    for (VertexId v = 0; v < n_; ++v) {
      current_[v] = net_.topology().first[v];
      if (is_inner(v) && excess_[v] > kEps) work.push_back(v);
    }
    const std::int64_t limit = 4 * static_cast<std::int64_t>(n_) * n_ + 16;
    std::int64_t steps = 0;
    while (!work.empty()) {
      const VertexId v = work.front();
      work.pop_front();
      const ArcId end = net_.topology().first[v + 1];
      while (excess_[v] > kEps) {
        if (++steps > limit) throw MaxflowError("excess return did not converge");
        ArcId& e = current_[v];
        for (; e < end && excess_[v] > kEps; ++e) {
          const VertexId w = net_.head(e);
          if (w == net_.sink() || res(e) <= kEps || dist[v] != dist[w] + 1) continue;
          const bool was_active = excess_[w] > kEps;
          push(e, std::min(excess_[v], res(e)));
          if (!was_active && excess_[w] > kEps && is_inner(w)) work.push_back(w);
          if (excess_[v] <= kEps) break;
        }
        if (excess_[v] <= kEps) break;
        std::int32_t best = kInfDist;
        for (ArcId a : net_.out_arcs(v)) {
          const VertexId w = net_.head(a);
          if (w == net_.sink() || res(a) <= kEps || dist[w] == kInfDist) continue;
          best = std::min(best, dist[w] + 1);
        }
        if (best == kInfDist) throw MaxflowError("stranded excess has no path back to the source");
        dist[v] = best;
        current_[v] = net_.topology().first[v];
      }
    }
  }

  const StaticNetwork& net_;
  VertexId n_;
  std::vector<double> flow_;
  std::vector<double> excess_;
  std::vector<std::int32_t> label_;
  std::vector<ArcId> current_;
  std::vector<std::vector<VertexId>> active_;
  std::vector<std::vector<VertexId>> level_;
  std::vector<std::size_t> level_pos_;
  std::int32_t max_active_ = 0;
  std::int32_t max_level_ = 0;
  std::int32_t relabels_since_global_ = 0;
};

}  // namespace

StaticFlow solve_prf(const StaticNetwork& net) { return PushRelabel(net).run(); }

}  // namespace pmc
