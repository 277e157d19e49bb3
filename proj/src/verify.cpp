#include "pmc/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "pmc/dichotomic.hpp"
#include "pmc/maxflow.hpp"

namespace pmc {

namespace {

VertexMask ek_sink_side(const ParametricNetwork& net, double lambda) {
  const StaticNetwork g = evaluate_at(net, lambda);
  return sink_component(g, solve_ek(g));
}

std::string describe(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

BreakpointFunction oracle_breakpoints(const ParametricNetwork& net, VertexId max_vertices) {
  const VertexId n = net.num_vertices();
  if (n > max_vertices) throw OracleError("network too large for the oracle");
  const double lmin = net.lambda_min();
  const double lmax = net.lambda_max();

  BreakpointFunction bp{std::vector<double>(n, kInf)};
  const VertexMask lo_side = ek_sink_side(net, lmin);
  VertexMask hi_side = ek_sink_side(net, lmax);
  for (VertexId v = 0; v < n; ++v) {
    if (!lo_side[v]) bp.beta[v] = lmin;
    hi_side[v] = hi_side[v] && lo_side[v];
  }

  struct Frame {
    double lo, hi;
    VertexMask lo_side, hi_side;
    AffineFn lo_cap, hi_cap;
  };
  std::vector<Frame> stack;
  stack.push_back({lmin, lmax, lo_side, hi_side, cut_capacity(net, lo_side), cut_capacity(net, hi_side)});
  std::size_t steps = 0;

  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (++steps > 4 * static_cast<std::size_t>(n) + 16) throw OracleError("oracle did not converge");

    std::vector<VertexId> middle;
    for (VertexId v = 0; v < n; ++v)
      if (f.lo_side[v] && !f.hi_side[v]) middle.push_back(v);
    if (middle.empty()) continue;

    const Intersection x = intersection_lambda(f.lo_cap, f.hi_cap);
    const double lm = x.exists ? std::clamp(x.lambda, f.lo, f.hi) : f.lo;
    auto settle = [&] {
      for (VertexId v : middle) bp.beta[v] = lm;
    };
    if (!x.exists || lm - f.lo <= kEps || f.hi - lm <= kEps) {
      settle();
      continue;
    }

    VertexMask side = ek_sink_side(net, lm);
    bool equals_lo = true;
    bool equals_hi = true;
    for (VertexId v = 0; v < n; ++v) {
      side[v] = (side[v] && f.lo_side[v]) || f.hi_side[v];
      equals_lo = equals_lo && side[v] == f.lo_side[v];
      equals_hi = equals_hi && side[v] == f.hi_side[v];
    }
    const AffineFn cap = cut_capacity(net, side);
    if (equals_lo || equals_hi || !is_strictly_better(cap, f.lo_cap, lm)) {
      settle();
      continue;
    }
    stack.push_back({lm, f.hi, side, f.hi_side, cap, f.hi_cap});
    stack.push_back({f.lo, lm, f.lo_side, side, f.lo_cap, cap});
  }
  bp.beta[net.source()] = lmin;
  bp.beta[net.sink()] = kInf;
  return bp;
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os << (ok() ? "PASS" : "FAIL") << ": " << probes.size() << " probes, " << violations.size() << " violations\n";
  for (const std::string& v : violations) os << "  " << v << '\n';
  return os.str();
}

VerifyReport verify_solution(const ParametricNetwork& net, const BreakpointFunction& bp, double tol) {
  VerifyReport report;
  const VertexId n = net.num_vertices();
  const double lmin = net.lambda_min();
  const double lmax = net.lambda_max();
  if (bp.beta.size() != static_cast<std::size_t>(n)) {
    report.violations.push_back("breakpoint function has " + std::to_string(bp.beta.size()) + " entries for " +
                                std::to_string(n) + " vertices");
    return report;
  }
  if (bp.beta[net.source()] > lmin) report.violations.push_back("source breakpoint must be lambda_min");
  if (bp.beta[net.sink()] <= lmax) report.violations.push_back("sink breakpoint must be +inf");

  std::vector<double> points{lmin, lmax};
  for (double b : bp.beta)
    if (std::isfinite(b) && b >= lmin && b <= lmax) points.push_back(b);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::size_t i = 0; i < points.size(); ++i) {
    report.probes.push_back(points[i]);
    if (i + 1 < points.size()) report.probes.push_back(0.5 * (points[i] + points[i + 1]));
  }

  struct Probe {
    double lambda;
    StaticNetwork g;
    StaticFlow flow;
    VertexMask reference;
  };
  std::vector<Probe> solved;
  for (double lambda : report.probes) {
    StaticNetwork g = evaluate_at(net, lambda);
    StaticFlow flow = solve_ek(g);
    VertexMask reference = sink_component(g, flow);
    solved.push_back({lambda, std::move(g), std::move(flow), std::move(reference)});
  }
  auto check_value = [&](const Probe& p, const VertexMask& claimed, const char* which) {
    const double cut = cut_capacity(p.g, claimed);
    if (std::abs(cut - p.flow.value) <= tol * std::max(1.0, std::abs(p.flow.value))) return;
    report.violations.push_back("lambda " + describe(p.lambda) + ": " + which + " capacity " + describe(cut) +
                                " but maximum flow " + describe(p.flow.value));
  };
  auto claimed_at = [&](double lambda) {
    VertexMask side = bp.sink_side(lambda);
    side[net.source()] = false;
    side[net.sink()] = true;
    return side;
  };

  for (std::size_t i = 0; i < solved.size(); ++i) {
    const Probe& p = solved[i];
    const VertexMask claimed = claimed_at(p.lambda);
    check_value(p, claimed, "cut");
    const double slack = tol * std::max(1.0, std::abs(p.lambda));
    for (VertexId v = 0; v < n; ++v) {
      if (claimed[v] == p.reference[v] || std::abs(bp.beta[v] - p.lambda) <= slack) continue;
      report.violations.push_back("lambda " + describe(p.lambda) + ": vertex " + std::to_string(v + 1) +
                                  (claimed[v] ? " claimed on sink side" : " claimed on source side"));
    }
    if (i > 0) {
      for (VertexId v = 0; v < n; ++v)
        if (p.reference[v] && !solved[i - 1].reference[v])
          report.violations.push_back("lambda " + describe(p.lambda) + ": sink components not nested at vertex " +
                                      std::to_string(v + 1));
    }
    // Odd probes are midpoints. The cut claimed there holds on the whole
    // open segment, so it must also be minimum at both ends.
    if (i % 2 == 1) {
      check_value(solved[i - 1], claimed, "segment cut");
      check_value(solved[i + 1], claimed, "segment cut");
    }
  }
  return report;
}

CompareReport compare_breakpoints(const BreakpointFunction& a, const BreakpointFunction& b, double tol) {
  if (a.beta.size() != b.beta.size()) throw std::invalid_argument("breakpoint functions differ in size");
  CompareReport report;

  std::vector<double> values;
  for (const auto* bp : {&a, &b})
    for (double x : bp->beta)
      if (std::isfinite(x)) values.push_back(x);
  std::sort(values.begin(), values.end());
  // cluster id of a finite value: index of the run it falls into
  std::vector<std::size_t> run_start(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    run_start[i] = (i > 0 && values[i] - values[i - 1] <= tol) ? run_start[i - 1] : i;
  auto cluster = [&](double x) {
    return run_start[static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), x) - values.begin())];
  };

  for (std::size_t v = 0; v < a.beta.size(); ++v) {
    const double x = a.beta[v];
    const double y = b.beta[v];
    if (std::isinf(x) || std::isinf(y)) {
      if (x == y) continue;
    } else {
      const double dev = std::abs(x - y);
      if (dev <= tol) {
        report.max_deviation = std::max(report.max_deviation, dev);
        continue;
      }
      if (cluster(x) == cluster(y)) {
        ++report.clustered;
        continue;
      }
    }
    ++report.mismatches;
    report.mismatched.push_back(static_cast<VertexId>(v));
  }
  return report;
}

}  // namespace pmc
