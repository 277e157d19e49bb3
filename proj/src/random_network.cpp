#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "pmc/instances.hpp"

namespace pmc {

NetworkSpec random_monotone_spec(std::uint64_t seed, const RandomNetworkOptions& opts) {
  SplitMix64 rng(seed);
  const VertexId n = opts.num_vertices > 0 ? opts.num_vertices : static_cast<VertexId>(rng.between(4, 40));
  if (n < 3) throw std::invalid_argument("random network needs at least three vertices");
  if (!(opts.lambda_max > 0.0)) throw std::invalid_argument("lambda_max must be positive");
  const VertexId k = n - 2;

  NetworkSpec spec;
  spec.num_vertices = n;
  spec.source = 0;
  spec.sink = 1;
  spec.lambda_min = 0.0;
  spec.lambda_max = opts.lambda_max;

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 1; i < k; ++i) edges.emplace_back(i, static_cast<VertexId>(rng.between(0, i - 1)));
  for (VertexId r = 0; r < k / 2; ++r) {
    const auto a = static_cast<VertexId>(rng.between(0, k - 1));
    const auto b = static_cast<VertexId>(rng.between(0, k - 1));
    if (a != b) edges.emplace_back(a, b);
  }
  for (const auto& [a, b] : edges) {
    spec.arcs.push_back({a + 2, b + 2, AffineFn::constant(static_cast<double>(rng.between(0, 10)))});
    spec.arcs.push_back({b + 2, a + 2, AffineFn::constant(static_cast<double>(rng.between(0, 10)))});
  }
  for (VertexId v = 2; v < n; ++v) {
    const auto slope = static_cast<double>(rng.between(0, 5));
    const auto icpt = static_cast<double>(rng.between(0, 5));
    spec.arcs.push_back({0, v, AffineFn::linear(slope, icpt)});
  }
  for (VertexId v = 2; v < n; ++v) {
    double icpt = static_cast<double>(rng.between(0, 10));
    double slope = 0.0;
    if (opts.parametric_sink) {
      slope = static_cast<double>(rng.between(-3, 0));
      icpt = std::max(icpt, -slope * opts.lambda_max);
    }
    if (opts.infinite_sink_prob > 0.0 && rng.uniform() < opts.infinite_sink_prob) {
      spec.arcs.push_back({v, 1, AffineFn::unbounded()});
      continue;
    }
    spec.arcs.push_back({v, 1, AffineFn::linear(slope, icpt)});
  }
  return spec;
}

FaceGraph random_grid_faces(std::int32_t k, std::uint64_t seed, double polygon_prob) {
  if (k < 1) throw std::invalid_argument("grid size must be positive");
  SplitMix64 rng(seed);
  const std::int32_t side = k + 1;
  std::vector<std::array<double, 2>> pts(static_cast<std::size_t>(side) * side);
  for (std::int32_t j = 0; j < side; ++j) {
    for (std::int32_t i = 0; i < side; ++i) {
      double x = i;
      double y = j;
      if (i > 0 && i < k) x += 0.5 * (rng.uniform() - 0.5);
      if (j > 0 && j < k) y += 0.5 * (rng.uniform() - 0.5);
      pts[static_cast<std::size_t>(j) * side + i] = {x, y};
    }
  }
  auto pt = [&](std::int32_t i, std::int32_t j) { return pts[static_cast<std::size_t>(j) * side + i]; };
  auto dist = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]);
  };
  auto area = [](const std::array<double, 2>& a, const std::array<double, 2>& b, const std::array<double, 2>& c) {
    return 0.5 * std::abs((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
  };

  FaceGraph fg;
  fg.faces.resize(2 * static_cast<std::size_t>(k) * k);
  // Cell (i, j) is split along its diagonal into lower face 2c+1 and upper
  // face 2c+2, with c = j * k + i.
  for (std::int32_t j = 0; j < k; ++j) {
    for (std::int32_t i = 0; i < k; ++i) {
      const std::int32_t c = j * k + i;
      const auto p00 = pt(i, j), p10 = pt(i + 1, j), p01 = pt(i, j + 1), p11 = pt(i + 1, j + 1);
      Face& lower = fg.faces[2 * c];
      Face& upper = fg.faces[2 * c + 1];
      lower.area = area(p00, p10, p11);
      upper.area = area(p00, p11, p01);
      lower.kind = rng.uniform() < polygon_prob ? FaceKind::Polygon : FaceKind::Triangle;
      upper.kind = rng.uniform() < polygon_prob ? FaceKind::Polygon : FaceKind::Triangle;
      if (j == 0) lower.outer_len += dist(p00, p10);
      if (i == k - 1) lower.outer_len += dist(p10, p11);
      if (i == 0) upper.outer_len += dist(p00, p01);
      if (j == k - 1) upper.outer_len += dist(p01, p11);

      fg.adjacencies.push_back({2 * c + 1, 2 * c + 2, dist(p00, p11)});
      if (i + 1 < k) fg.adjacencies.push_back({2 * c + 1, 2 * (c + 1) + 2, dist(p10, p11)});
      if (j > 0) fg.adjacencies.push_back({2 * c + 1, 2 * (c - k) + 2, dist(p00, p10)});
    }
  }
  return fg;
}

}  // namespace pmc
