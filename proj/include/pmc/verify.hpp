#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "pmc/network.hpp"

namespace pmc {

class OracleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr VertexId kOracleMaxVertices = 200;

/// Breakpoints by bisection on the full network with Edmonds-Karp solves,
/// no contraction. Throws OracleError above max_vertices.
BreakpointFunction oracle_breakpoints(const ParametricNetwork& net, VertexId max_vertices = kOracleMaxVertices);

struct VerifyReport {
  std::vector<double> probes;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
  std::string to_text() const;
};

/// Probes lambda_min, lambda_max, every breakpoint value and the midpoints
/// between consecutive probes. At each probe the cut {v : beta(v) > lambda}
/// must have capacity equal to the max-flow value (within tol, relative for
/// values above 1) and equal the residual sink component of that flow.
/// Vertices whose breakpoint lies within tol of the probe are exempt from
/// the set comparison. The cut claimed on each open segment between
/// breakpoints is also checked at both segment ends.
VerifyReport verify_solution(const ParametricNetwork& net, const BreakpointFunction& bp, double tol = 1e-6);

struct CompareReport {
  std::size_t mismatches = 0;
  /// Disagreements inside a run of breakpoint values spaced at most tol
  /// apart; not counted as mismatches.
  std::size_t clustered = 0;
  double max_deviation = 0.0;
  std::vector<VertexId> mismatched;

  bool ok() const { return mismatches == 0; }
};

/// Per-vertex comparison; +inf matches only +inf. Throws
/// std::invalid_argument on different vertex counts.
CompareReport compare_breakpoints(const BreakpointFunction& a, const BreakpointFunction& b, double tol = 1e-6);

}  // namespace pmc
