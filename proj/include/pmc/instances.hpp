#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pmc/network.hpp"

namespace pmc {

/// Input error with the 1-based line it was found on (0 when it concerns
/// the whole file).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// ---------------------------------------------------------------------------
// .pmax instances
//
//   c <comment>
//   p pmax <n> <m>            (or "p max <n> <m>" for static instances)
//   n <id> s
//   n <id> t
//   l <lambda_min> <lambda_max>
//   a <tail> <head> <slope> <intercept>
//   a <tail> <head> inf
//
// Static files use "a <tail> <head> <cap>" and default to the interval [0,1].

/// Declared arcs without normalization. Vertex ids are 0-based.
NetworkSpec parse_pmax_spec(std::string_view text);

/// Parses, normalizes and checks monotonicity.
ParametricNetwork parse_pmax(std::string_view text);

/// Canonical text: arcs sorted by (tail, head), zero arcs left out.
std::string write_pmax(const ParametricNetwork& net, const std::vector<std::string>& comments = {});

// ---------------------------------------------------------------------------
// Breakpoint CSV: header "vertex,breakpoint", 1-based ids, "inf" for +inf.

std::string export_breakpoints_csv(const BreakpointFunction& bp);
BreakpointFunction parse_breakpoints_csv(std::string_view text);

// ---------------------------------------------------------------------------
// Face graphs
//
//   f <id> <polygon|triangle> <area> <outer_len>
//   e <i> <j> <shared_len>

enum class FaceKind { Polygon, Triangle };

struct Face {
  FaceKind kind = FaceKind::Triangle;
  double area = 0.0;
  double outer_len = 0.0;
};

struct FaceAdjacency {
  std::int32_t i = 0;
  std::int32_t j = 0;
  double shared_len = 0.0;
};

/// Faces are indexed by id - 1.
struct FaceGraph {
  std::vector<Face> faces;
  std::vector<FaceAdjacency> adjacencies;
};

FaceGraph parse_face_graph(std::string_view text);
std::string write_face_graph(const FaceGraph& fg);

inline constexpr double kDefaultAggregationLambdaMax = 1e6;

/// s is vertex 0, t vertex 1 and face id i becomes vertex i + 1.
ParametricNetwork build_aggregation_network(const FaceGraph& fg,
                                            double lambda_max = kDefaultAggregationLambdaMax);

// ---------------------------------------------------------------------------
// Generators

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1): next() / 2^64.
  double uniform() { return static_cast<double>(next()) * 0x1p-64; }

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

/// Gives every declared arc leaving s the capacity c1 + lambda * c2 with
/// c1, c2 drawn uniformly from [1, y] (c1 first). Other arcs keep their
/// constant capacity. Throws std::invalid_argument if y < 1.
NetworkSpec synth_parametrize(const NetworkSpec& static_spec, double y, std::uint64_t seed, double lambda_min = 0.0,
                              double lambda_max = 1.0);

struct RandomNetworkOptions {
  /// Total vertex count including s and t; 0 draws it from [4, 40].
  VertexId num_vertices = 0;
  /// Sink arcs get slopes in [-3, 0], intercepts raised to stay nonnegative.
  bool parametric_sink = false;
  /// Probability that a sink arc is infinite.
  double infinite_sink_prob = 0.0;
  double lambda_max = 4.0;
};

/// Random monotone network: s = 0, t = 1, a connected sparse interior graph
/// with integer capacities in [0, 10], source arcs with integer slope and
/// intercept in [0, 5], sink arcs with intercept in [0, 10].
NetworkSpec random_monotone_spec(std::uint64_t seed, const RandomNetworkOptions& opts = {});

/// Jittered k x k grid, each cell split into two triangles, so 2k^2 faces.
/// Each face is a polygon with probability polygon_prob.
FaceGraph random_grid_faces(std::int32_t k, std::uint64_t seed, double polygon_prob = 0.3);

}  // namespace pmc
