#pragma once

#include <limits>

namespace pmc {

/// Absolute comparison tolerance on capacities and parameter values.
/// An arc counts as saturated when its residual capacity is at most kEps.
inline constexpr double kEps = 1e-9;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Affine function of the parameter: slope * lambda + intercept.
///
/// Capacities, flows and excesses are all represented this way. An infinite
/// function ignores its coefficients and evaluates to +inf everywhere; it is
/// only meaningful as a capacity.
struct AffineFn {
  double slope = 0.0;
  double intercept = 0.0;
  bool infinite = false;

  static constexpr AffineFn constant(double c) { return {0.0, c, false}; }
  static constexpr AffineFn linear(double slope, double intercept) { return {slope, intercept, false}; }
  static constexpr AffineFn unbounded() { return {0.0, 0.0, true}; }

  constexpr double operator()(double lambda) const {
    return infinite ? kInf : slope * lambda + intercept;
  }

  constexpr bool is_zero() const { return !infinite && slope == 0.0 && intercept == 0.0; }
  constexpr bool is_constant() const { return infinite || slope == 0.0; }

  constexpr AffineFn operator-() const { return infinite ? *this : AffineFn{-slope, -intercept, false}; }

  constexpr AffineFn& operator+=(const AffineFn& o) {
    if (infinite || o.infinite) {
      *this = unbounded();
    } else {
      slope += o.slope;
      intercept += o.intercept;
    }
    return *this;
  }
  // Subtracting a finite function from an infinite one stays infinite;
  // infinite - infinite never occurs because flows are always finite.
  constexpr AffineFn& operator-=(const AffineFn& o) {
    if (infinite) return *this;
    if (o.infinite) {
      *this = unbounded();
      return *this;
    }
    slope -= o.slope;
    intercept -= o.intercept;
    return *this;
  }

  friend constexpr AffineFn operator+(AffineFn a, const AffineFn& b) { return a += b; }
  friend constexpr AffineFn operator-(AffineFn a, const AffineFn& b) { return a -= b; }
  friend constexpr bool operator==(const AffineFn&, const AffineFn&) = default;
};

/// Smallest lambda* >= lambda_lo at which f reaches zero, or +inf if f stays
/// positive on [lambda_lo, inf). Used to compute flow limits of tree arcs from
/// their residual capacity functions.
double smallest_root(const AffineFn& f, double lambda_lo);

/// Parameter value at which two finite affine functions are equal, if they
/// are not parallel.
struct Intersection {
  bool exists = false;
  double lambda = 0.0;
};
Intersection intersection_lambda(const AffineFn& a, const AffineFn& b);

}  // namespace pmc
