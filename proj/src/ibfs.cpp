// Bidirectional search trees grown from s and t. Tree arcs always satisfy
// d(child) = d(parent) + 1, so the trees stay acyclic through adoption.
// Orphans are processed in ascending label order, FIFO within a label.

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "pmc/maxflow.hpp"

namespace pmc {

namespace {

enum class Tree : std::uint8_t { Free, S, T };

class Ibfs {
 public:
  explicit Ibfs(const StaticNetwork& net)
      : net_(net),
        n_(net.num_vertices()),
        flow_(net.num_arcs(), 0.0),
        tree_(n_, Tree::Free),
        dist_(n_, 0),
        parent_(n_, kNoArc),
        first_child_(n_, -1),
        next_sibling_(n_, -1),
        prev_sibling_(n_, -1),
        current_(n_, 0),
        orphan_buckets_(n_ + 1),
        queued_{std::vector<bool>(n_, false), std::vector<bool>(n_, false)} {}

  StaticFlow run() {
    const VertexId s = net_.source();
    const VertexId t = net_.sink();
    tree_[s] = Tree::S;
    tree_[t] = Tree::T;
    activate(0, s);
    activate(1, t);

    // Freed vertices may join either tree out of order, so both queues are
    // drained before the S tree is known to be closed.
    while (!active_[0].empty() || !active_[1].empty()) {
      int side = active_[0].size() <= active_[1].size() ? 0 : 1;
      if (active_[side].empty()) side = 1 - side;
      std::size_t batch = active_[side].size();
      while (batch-- > 0 && !active_[side].empty()) {
        const VertexId v = active_[side].front();
        active_[side].pop_front();
        queued_[side][v] = false;
        if (side == 0 && tree_[v] == Tree::S) grow_source(v);
        if (side == 1 && tree_[v] == Tree::T) grow_sink(v);
      }
    }
    StaticFlow out{std::move(flow_), 0.0};
    out.value = flow_value(net_, out);
    return out;
  }

 private:
  double res(ArcId e) const { return net_.cap(e) - flow_[e]; }

  void grow_source(VertexId v) {
    for (ArcId e : net_.out_arcs(v)) {
      const VertexId w = net_.head(e);
      while (tree_[v] == Tree::S && res(e) > kEps && tree_[w] == Tree::T) augment(e);
      if (tree_[v] != Tree::S) return;
      if (tree_[w] == Tree::Free && res(e) > kEps) attach(w, Tree::S, net_.rev(e), v);
    }
  }

  void grow_sink(VertexId x) {
    for (ArcId e : net_.out_arcs(x)) {
      const VertexId y = net_.head(e);
      const ArcId a = net_.rev(e);
      while (tree_[x] == Tree::T && res(a) > kEps && tree_[y] == Tree::S) augment(a);
      if (tree_[x] != Tree::T) return;
      if (tree_[y] == Tree::Free && res(a) > kEps) attach(y, Tree::T, a, x);
    }
  }

  // `arc` leaves w and leads to `par` in both trees.
  void attach(VertexId w, Tree side, ArcId arc, VertexId par) {
    tree_[w] = side;
    dist_[w] = dist_[par] + 1;
    auto& top = top_[side == Tree::S ? 0 : 1];
    top = std::max(top, dist_[w]);
    current_[w] = net_.topology().first[w];
    link(w, arc);
    activate(side == Tree::S ? 0 : 1, w);
  }

  void activate(int side, VertexId v) {
    if (queued_[side][v]) return;
    queued_[side][v] = true;
    active_[side].push_back(v);
  }

  void link(VertexId v, ArcId arc) {
    const VertexId par = net_.head(arc);
    parent_[v] = arc;
    prev_sibling_[v] = -1;
    next_sibling_[v] = first_child_[par];
    if (first_child_[par] >= 0) prev_sibling_[first_child_[par]] = v;
    first_child_[par] = v;
  }

  void unlink(VertexId v) {
    const VertexId par = net_.head(parent_[v]);
    if (prev_sibling_[v] >= 0) next_sibling_[prev_sibling_[v]] = next_sibling_[v];
    else first_child_[par] = next_sibling_[v];
    if (next_sibling_[v] >= 0) prev_sibling_[next_sibling_[v]] = prev_sibling_[v];
    parent_[v] = kNoArc;
  }

  void make_orphan(VertexId v) {
    unlink(v);
    queue_orphan(v);
  }

  void queue_orphan(VertexId v) {
    orphan_buckets_[dist_[v]].push_back(v);
    min_orphan_ = std::min(min_orphan_, dist_[v]);
    max_orphan_ = std::max(max_orphan_, dist_[v]);
  }

  void push(ArcId e, double amount) {
    flow_[e] += amount;
    flow_[net_.rev(e)] -= amount;
  }

  void augment(ArcId bridge) {
    const VertexId s = net_.source();
    const VertexId t = net_.sink();
    double bottleneck = res(bridge);
    for (VertexId v = net_.tail(bridge); v != s; v = net_.head(parent_[v]))
      bottleneck = std::min(bottleneck, res(net_.rev(parent_[v])));
    for (VertexId v = net_.head(bridge); v != t; v = net_.head(parent_[v]))
      bottleneck = std::min(bottleneck, res(parent_[v]));
    if (std::isinf(bottleneck)) throw MaxflowError("augmenting path of infinite capacity");

    push(bridge, bottleneck);
    for (VertexId v = net_.tail(bridge); v != s;) {
      const VertexId par = net_.head(parent_[v]);
      const ArcId a = net_.rev(parent_[v]);
      push(a, bottleneck);
      if (res(a) <= kEps) make_orphan(v);
      v = par;
    }
    for (VertexId v = net_.head(bridge); v != t;) {
      const VertexId par = net_.head(parent_[v]);
      const ArcId a = parent_[v];
      push(a, bottleneck);
      if (res(a) <= kEps) make_orphan(v);
      v = par;
    }
    adopt_orphans();
  }

  // Residual capacity of the arc that would join v to neighbor head(e).
  double link_res(VertexId v, ArcId e) const { return tree_[v] == Tree::S ? res(net_.rev(e)) : res(e); }

  // Adoption only queues orphans one label higher, so each bucket is
  // complete once the loop reaches it.
  void adopt_orphans() {
    for (; min_orphan_ <= max_orphan_; ++min_orphan_) {
      auto& bucket = orphan_buckets_[min_orphan_];
      for (std::size_t i = 0; i < bucket.size(); ++i) adopt(bucket[i]);
      bucket.clear();
    }
    min_orphan_ = std::numeric_limits<std::int32_t>::max();
    max_orphan_ = -1;
  }

  void adopt(VertexId v) {
    const Tree side = tree_[v];
    const ArcId end = net_.topology().first[v + 1];
    for (ArcId e = current_[v]; e < end; ++e) {
      const VertexId w = net_.head(e);
      if (tree_[w] == side && dist_[w] == dist_[v] - 1 && link_res(v, e) > kEps) {
        current_[v] = e;
        link(v, e);
        return;
      }
    }
    for (VertexId c = first_child_[v]; c >= 0;) {
      const VertexId next = next_sibling_[c];
      make_orphan_child(c);
      c = next;
    }
    first_child_[v] = -1;

    ArcId best = kNoArc;
    for (ArcId e : net_.out_arcs(v)) {
      const VertexId w = net_.head(e);
      if (tree_[w] != side || link_res(v, e) <= kEps) continue;
      if (parent_[w] == kNoArc && w != net_.source() && w != net_.sink()) continue;
      if (best == kNoArc || dist_[w] < dist_[net_.head(best)]) best = e;
    }
    if (best != kNoArc && dist_[net_.head(best)] + 1 <= top_[side == Tree::S ? 0 : 1]) {
      dist_[v] = dist_[net_.head(best)] + 1;
      current_[v] = best;
      link(v, best);
      return;
    }
    // Neighbors that could grow into v are rescanned.
    tree_[v] = Tree::Free;
    for (ArcId e : net_.out_arcs(v)) {
      const VertexId w = net_.head(e);
      if (tree_[w] == Tree::S && res(net_.rev(e)) > kEps) activate(0, w);
      if (tree_[w] == Tree::T && res(e) > kEps) activate(1, w);
    }
  }

  void make_orphan_child(VertexId c) {
    parent_[c] = kNoArc;
    queue_orphan(c);
  }

  const StaticNetwork& net_;
  VertexId n_;
  std::vector<double> flow_;
  std::vector<Tree> tree_;
  std::vector<std::int32_t> dist_;
  std::vector<ArcId> parent_;
  std::vector<VertexId> first_child_;
  std::vector<VertexId> next_sibling_;
  std::vector<VertexId> prev_sibling_;
  std::vector<ArcId> current_;
  std::deque<VertexId> active_[2];
  std::vector<std::vector<VertexId>> orphan_buckets_;
  std::vector<bool> queued_[2];
  std::int32_t top_[2] = {0, 0};
  std::int32_t min_orphan_ = std::numeric_limits<std::int32_t>::max();
  std::int32_t max_orphan_ = -1;
};

}  // namespace

IbfsResult solve_ibfs(const StaticNetwork& net) {
  IbfsResult out;
  out.flow = Ibfs(net).run();
  out.sink = sink_distances(net, out.flow);
  return out;
}

}  // namespace pmc
