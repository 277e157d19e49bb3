#pragma once

#include <cstdint>
#include <vector>

#include "pmc/network.hpp"

namespace pmc {

/// Addressable binary min-heap over arc ids with double keys.
class ArcHeap {
 public:
  explicit ArcHeap(ArcId num_arcs = 0) : pos_(num_arcs, -1) {}

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }
  bool contains(ArcId e) const { return pos_[e] >= 0; }
  ArcId top() const { return heap_.front().arc; }
  double top_key() const { return heap_.front().key; }
  double key(ArcId e) const { return heap_[pos_[e]].key; }

  /// Inserts e or changes its key.
  void set(ArcId e, double key) {
    if (pos_[e] < 0) {
      pos_[e] = static_cast<std::int32_t>(heap_.size());
      heap_.push_back({e, key});
      sift_up(pos_[e]);
      return;
    }
    const std::int32_t i = pos_[e];
    const double old = heap_[i].key;
    heap_[i].key = key;
    if (key < old) sift_up(i);
    else sift_down(i);
  }

  void erase(ArcId e) {
    const std::int32_t i = pos_[e];
    if (i < 0) return;
    const std::int32_t last = static_cast<std::int32_t>(heap_.size()) - 1;
    swap_nodes(i, last);
    heap_.pop_back();
    pos_[e] = -1;
    if (i < last) {
      sift_up(i);
      sift_down(i);
    }
  }

  ArcId pop() {
    const ArcId e = top();
    erase(e);
    return e;
  }

 private:
  struct Node {
    ArcId arc;
    double key;
  };

  void swap_nodes(std::int32_t a, std::int32_t b) {
    std::swap(heap_[a], heap_[b]);
    pos_[heap_[a].arc] = a;
    pos_[heap_[b].arc] = b;
  }

  void sift_up(std::int32_t i) {
    while (i > 0) {
      const std::int32_t p = (i - 1) / 2;
      if (!(heap_[i].key < heap_[p].key)) break;
      swap_nodes(i, p);
      i = p;
    }
  }

  void sift_down(std::int32_t i) {
    const std::int32_t n = static_cast<std::int32_t>(heap_.size());
    while (true) {
      const std::int32_t l = 2 * i + 1;
      if (l >= n) break;
      std::int32_t c = l;
      if (l + 1 < n && heap_[l + 1].key < heap_[l].key) c = l + 1;
      if (!(heap_[c].key < heap_[i].key)) break;
      swap_nodes(i, c);
      i = c;
    }
  }

  std::vector<Node> heap_;
  std::vector<std::int32_t> pos_;
};

}  // namespace pmc
