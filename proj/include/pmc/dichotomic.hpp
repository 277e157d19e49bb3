#pragma once

#include <stdexcept>

#include "pmc/network.hpp"

namespace pmc {

enum class StaticSolver { Ibfs, PushRelabel };

class DsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DsStats {
  std::size_t breakpoints = 0;
  std::size_t solves = 0;
  std::size_t contracted_vertices = 0;
  double contraction_ms = 0.0;
  double solve_ms = 0.0;
};

struct DsResult {
  BreakpointFunction breakpoints;
  DsStats stats;
};

/// True iff incumbent(lambda) > (1 + epsilon) * candidate(lambda) + kEps.
bool is_strictly_better(const AffineFn& candidate, const AffineFn& incumbent, double lambda, double epsilon = 0.0);

/// Sink side of the sink-minimal minimum cut of net at lambda.
VertexMask min_cut_sink_side(const ParametricNetwork& net, double lambda, StaticSolver solver);

/// Dichotomic scheme: bisects the interval at the parameter where the two
/// bracketing cuts have equal capacity, solving a contracted network at each
/// step. With epsilon > 0 a cut is kept unless some cut is more than a
/// factor (1 + epsilon) cheaper. Throws NetworkError on non-monotone input
/// and DsError if the recursion runs away.
DsResult ds_run(const ParametricNetwork& net, StaticSolver solver, double epsilon = 0.0);

}  // namespace pmc
