#include <stdexcept>

#include "pmc/instances.hpp"

namespace pmc {

NetworkSpec synth_parametrize(const NetworkSpec& static_spec, double y, std::uint64_t seed, double lambda_min,
                              double lambda_max) {
  if (!(y >= 1.0)) throw std::invalid_argument("y must be at least 1");
  NetworkSpec out = static_spec;
  out.lambda_min = lambda_min;
  out.lambda_max = lambda_max;
  SplitMix64 rng(seed);
  for (ArcSpec& a : out.arcs) {
    if (a.tail != out.source || a.head == out.source) continue;
    const double c1 = 1.0 + rng.uniform() * (y - 1.0);
    const double c2 = 1.0 + rng.uniform() * (y - 1.0);
    a.cap = AffineFn::linear(c2, c1);
  }
  return out;
}

}  // namespace pmc
