#include "pmc/affine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace pmc {

double smallest_root(const AffineFn& f, double lambda_lo) {
  if (f.infinite || f.slope >= 0.0) return kInf;
  assert(f(lambda_lo) >= -1e-6 * std::max(1.0, std::abs(f.intercept)));
  const double root = -f.intercept / f.slope;
  return std::max(root, lambda_lo);
}

Intersection intersection_lambda(const AffineFn& a, const AffineFn& b) {
  if (a.infinite || b.infinite || a.slope == b.slope) return {};
  return {true, (b.intercept - a.intercept) / (a.slope - b.slope)};
}

}  // namespace pmc
