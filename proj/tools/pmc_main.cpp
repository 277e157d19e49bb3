// pmc: parametric minimum cut solver, verifier, instance generator and
// benchmark driver.
//
// Exit codes: 0 success, 1 input or usage error, 2 internal error,
// 3 verification found violations.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmc/dichotomic.hpp"
#include "pmc/instances.hpp"
#include "pmc/maxflow.hpp"
#include "pmc/pbfs.hpp"
#include "pmc/verify.hpp"

namespace {

using namespace pmc;
using json = nlohmann::ordered_json;

enum Exit { kOk = 0, kInputError = 1, kInternalError = 2, kViolations = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write " + path);
}

ParametricNetwork load_network(const std::string& path) {
  try {
    return parse_pmax(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct Run {
  BreakpointFunction breakpoints;
  std::size_t bp = 0;
  double total_ms = 0.0;
  json stats;
  // bench columns; negative means not applicable
  double ad_per_bp = -1, loop_per_init = -1, bot_per_bp = -1, dist = -1, vert = -1, contr_pct = -1;
};

double ratio(double a, double b) { return b > 0 ? a / b : 0.0; }

Run run_algorithm(const std::string& alg, const ParametricNetwork& net, double epsilon) {
  Run run;
  const auto t0 = std::chrono::steady_clock::now();
  if (alg == "pbfs") {
    if (epsilon != 0.0) throw InputError("pbfs is exact; --epsilon applies to ds-ibfs and ds-prf");
    PbfsResult r = run_pbfs(net);
    run.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const PbfsStats& s = r.stats;
    std::size_t contracted = 0;
    for (VertexId v = 0; v < net.num_vertices(); ++v)
      if (v != net.source() && std::isfinite(r.breakpoints.beta[v])) ++contracted;
    run.bp = s.breakpoints;
    run.stats = {{"breakpoints", s.breakpoints},       {"adoptions", s.adoptions},
                 {"bottleneck_edges", s.bottleneck_edges}, {"init_ms", s.init_ms},
                 {"loop_ms", s.loop_ms},               {"contracted_vertices", contracted},
                 {"contraction_ms", 0.0}};
    run.ad_per_bp = ratio(static_cast<double>(s.adoptions), static_cast<double>(s.breakpoints));
    run.loop_per_init = ratio(s.loop_ms, s.init_ms);
    run.bot_per_bp = ratio(static_cast<double>(s.bottleneck_edges), static_cast<double>(s.breakpoints));
    run.dist = ratio(s.adopted_distance_sum, static_cast<double>(s.adoptions));
    run.breakpoints = std::move(r.breakpoints);
    return run;
  }
  StaticSolver solver;
  if (alg == "ds-ibfs") solver = StaticSolver::Ibfs;
  else if (alg == "ds-prf") solver = StaticSolver::PushRelabel;
  else throw InputError("unknown algorithm '" + alg + "'");
  if (!(epsilon >= 0.0)) throw InputError("--epsilon must be nonnegative");
  DsResult r = ds_run(net, solver, epsilon);
  run.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const DsStats& s = r.stats;
  run.bp = s.breakpoints;
  run.stats = {{"breakpoints", s.breakpoints},
               {"adoptions", 0},
               {"bottleneck_edges", 0},
               {"init_ms", 0.0},
               {"loop_ms", run.total_ms},
               {"contracted_vertices", s.contracted_vertices},
               {"contraction_ms", s.contraction_ms}};
  run.vert = ratio(static_cast<double>(s.contracted_vertices), static_cast<double>(net.num_vertices()));
  run.contr_pct = 100.0 * ratio(s.contraction_ms, run.total_ms);
  run.breakpoints = std::move(r.breakpoints);
  return run;
}

std::string cell(double x) {
  if (x < 0) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string alg = "pbfs";
  std::string input;
  double epsilon = 0.0;
  std::string output;
  std::string stats;
};

int cmd_solve(const SolveArgs& a) {
  const ParametricNetwork net = load_network(a.input);
  const Run run = run_algorithm(a.alg, net, a.epsilon);
  const std::string csv = export_breakpoints_csv(run.breakpoints);
  write_output(a.output, csv);
  if (!a.stats.empty()) write_output(a.stats, run.stats.dump(2) + "\n");
  return kOk;
}

struct VerifyArgs {
  std::string input;
  std::string breakpoints;
  double tol = 1e-6;
  std::string json_out;
};

int cmd_verify(const VerifyArgs& a) {
  const ParametricNetwork net = load_network(a.input);
  BreakpointFunction bp;
  try {
    bp = parse_breakpoints_csv(read_file(a.breakpoints));
  } catch (const ParseError& e) {
    throw InputError(a.breakpoints + ": " + e.what());
  }
  if (bp.beta.size() != static_cast<std::size_t>(net.num_vertices()))
    throw InputError("breakpoint file has " + std::to_string(bp.beta.size()) + " vertices, network has " +
                     std::to_string(net.num_vertices()));
  if (!(a.tol > 0.0)) throw InputError("--tol must be positive");
  const VerifyReport report = verify_solution(net, bp, a.tol);
  std::cout << report.to_text();
  if (!a.json_out.empty()) {
    const json j = {{"pass", report.ok()}, {"probes", report.probes.size()}, {"violations", report.violations}};
    write_output(a.json_out, j.dump(2) + "\n");
  }
  return report.ok() ? kOk : kViolations;
}

struct GenerateArgs {
  std::string input;
  std::string out;
  double y = 10.0;
  std::uint64_t seed = 1;
  double lambda_min = 0.0;
  double lambda_max = 1.0;
  double agg_lambda_max = kDefaultAggregationLambdaMax;
  VertexId n = 0;
  bool parametric_sink = false;
  double infinite_sink_prob = 0.0;
  std::int32_t k = 10;
  double polygon_prob = 0.3;
};

int cmd_generate_synth(const GenerateArgs& a) {
  if (!(a.y >= 1.0)) throw InputError("--y must be at least 1");
  if (!(a.lambda_min < a.lambda_max)) throw InputError("empty parameter interval");
  NetworkSpec spec;
  try {
    spec = parse_pmax_spec(read_file(a.input));
  } catch (const ParseError& e) {
    throw InputError(a.input + ": " + e.what());
  }
  ParametricNetwork net = normalize(synth_parametrize(spec, a.y, a.seed, a.lambda_min, a.lambda_max));
  std::ostringstream c;
  c << "synth y=" << a.y << " seed=" << a.seed;
  write_output(a.out, write_pmax(net, {c.str()}));
  return kOk;
}

int cmd_generate_agg(const GenerateArgs& a, bool lambda_given) {
  if (!(a.agg_lambda_max > 0.0)) throw InputError("--lambda-max must be positive");
  FaceGraph fg;
  try {
    fg = parse_face_graph(read_file(a.input));
  } catch (const ParseError& e) {
    throw InputError(a.input + ": " + e.what());
  }
  const ParametricNetwork net = build_aggregation_network(fg, a.agg_lambda_max);
  std::vector<std::string> comments{"aggregation network, " + std::to_string(fg.faces.size()) + " faces"};
  if (!lambda_given) comments.push_back("lambda_max is the default stand-in for an unbounded interval");
  write_output(a.out, write_pmax(net, comments));
  return kOk;
}

int cmd_generate_random(const GenerateArgs& a) {
  if (a.n != 0 && a.n < 3) throw InputError("--n must be at least 3");
  if (!(a.infinite_sink_prob >= 0.0 && a.infinite_sink_prob <= 1.0))
    throw InputError("--infinite-sink-prob must lie in [0, 1]");
  RandomNetworkOptions opts;
  opts.num_vertices = a.n;
  opts.parametric_sink = a.parametric_sink;
  opts.infinite_sink_prob = a.infinite_sink_prob;
  const ParametricNetwork net = normalize(random_monotone_spec(a.seed, opts));
  write_output(a.out, write_pmax(net, {"random monotone network seed=" + std::to_string(a.seed)}));
  return kOk;
}

int cmd_generate_grid(const GenerateArgs& a) {
  if (a.k < 1 || a.k > 4096) throw InputError("--k must lie in [1, 4096]");
  if (!(a.polygon_prob >= 0.0 && a.polygon_prob <= 1.0)) throw InputError("--polygon-prob must lie in [0, 1]");
  write_output(a.out, write_face_graph(random_grid_faces(a.k, a.seed, a.polygon_prob)));
  return kOk;
}

struct BenchArgs {
  std::string input;
  std::vector<std::string> algs{"pbfs", "ds-ibfs", "ds-prf"};
  int repeat = 1;
  double epsilon = 0.0;
};

int cmd_bench(const BenchArgs& a) {
  if (a.repeat < 1) throw InputError("--repeat must be at least 1");
  for (const std::string& alg : a.algs)
    if (alg != "pbfs" && alg != "ds-ibfs" && alg != "ds-prf") throw InputError("unknown algorithm '" + alg + "'");
  const ParametricNetwork net = load_network(a.input);
  std::ostringstream out;
  out << "alg,time_ms,BP,Ad/BP,Loop/Init,Bot/BP,Dist,Vert,Contr%\n";
  for (const std::string& alg : a.algs) {
    std::vector<double> times;
    Run run;
    for (int k = 0; k < a.repeat; ++k) {
      run = run_algorithm(alg, net, alg == "pbfs" ? 0.0 : a.epsilon);
      times.push_back(run.total_ms);
    }
    std::sort(times.begin(), times.end());
    const double median = times.size() % 2 ? times[times.size() / 2]
                                           : 0.5 * (times[times.size() / 2 - 1] + times[times.size() / 2]);
    out << alg << ',' << cell(median) << ',' << run.bp << ',' << cell(run.ad_per_bp) << ','
        << cell(run.loop_per_init) << ',' << cell(run.bot_per_bp) << ',' << cell(run.dist) << ','
        << cell(run.vert) << ',' << cell(run.contr_pct) << '\n';
  }
  std::cout << out.str();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric minimum cut: breakpoint solver, verifier and generators"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Compute the breakpoint function");
  s->add_option("--alg", solve.alg, "pbfs, ds-ibfs or ds-prf")->check(CLI::IsMember({"pbfs", "ds-ibfs", "ds-prf"}));
  s->add_option("--input", solve.input, "Instance (.pmax)")->required();
  s->add_option("--epsilon", solve.epsilon, "Approximation factor for ds-*");
  s->add_option("--output", solve.output, "Breakpoint CSV (default: standard output)");
  s->add_option("--stats", solve.stats, "Stats JSON");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a breakpoint function against max-flow solves");
  v->add_option("--input", verify.input, "Instance (.pmax)")->required();
  v->add_option("--breakpoints", verify.breakpoints, "Breakpoint CSV")->required();
  v->add_option("--tol", verify.tol, "Tolerance");
  v->add_option("--json", verify.json_out, "Write the report as JSON");

  GenerateArgs gen;
  bool agg_lambda_given = false;
  auto* g = app.add_subcommand("generate", "Write instances");
  g->require_subcommand(1);
  auto* g_synth = g->add_subcommand("synth", "Parametrize a static max-flow instance");
  g_synth->add_option("--input", gen.input, "Static instance (p max)")->required();
  g_synth->add_option("--y", gen.y, "Coefficients drawn from [1, y]")->required();
  g_synth->add_option("--seed", gen.seed, "Seed")->required();
  g_synth->add_option("--lambda-min", gen.lambda_min, "Interval start");
  g_synth->add_option("--lambda-max", gen.lambda_max, "Interval end");
  g_synth->add_option("--out", gen.out, "Output (.pmax)");
  auto* g_agg = g->add_subcommand("agg", "Aggregation network from a face graph");
  g_agg->add_option("--input", gen.input, "Face graph (.fg)")->required();
  g_agg->add_option_function<double>(
      "--lambda-max",
      [&](double x) {
        gen.agg_lambda_max = x;
        agg_lambda_given = true;
      },
      "Interval end (default 1e6)");
  g_agg->add_option("--out", gen.out, "Output (.pmax)");
  auto* g_random = g->add_subcommand("random", "Random monotone network");
  g_random->add_option("--n", gen.n, "Vertex count including s and t (default: drawn from [4, 40])");
  g_random->add_option("--seed", gen.seed, "Seed")->required();
  g_random->add_flag("--parametric-sink", gen.parametric_sink, "Decreasing sink capacities");
  g_random->add_option("--infinite-sink-prob", gen.infinite_sink_prob, "Probability of an infinite sink arc");
  g_random->add_option("--out", gen.out, "Output (.pmax)");
  auto* g_grid = g->add_subcommand("grid", "Random triangulated grid face graph with 2k^2 faces");
  g_grid->add_option("--k", gen.k, "Grid size")->required();
  g_grid->add_option("--seed", gen.seed, "Seed")->required();
  g_grid->add_option("--polygon-prob", gen.polygon_prob, "Probability that a face is a polygon");
  g_grid->add_option("--out", gen.out, "Output (.fg)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Time algorithms on one instance");
  b->add_option("--input", bench.input, "Instance (.pmax)")->required();
  b->add_option("--algs", bench.algs, "Comma-separated algorithm list")->delimiter(',');
  b->add_option("--repeat", bench.repeat, "Runs per algorithm; the median time is reported");
  b->add_option("--epsilon", bench.epsilon, "Approximation factor for ds-*");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*s) return cmd_solve(solve);
    if (*v) return cmd_verify(verify);
    if (*g_synth) return cmd_generate_synth(gen);
    if (*g_agg) return cmd_generate_agg(gen, agg_lambda_given);
    if (*g_random) return cmd_generate_random(gen);
    if (*g_grid) return cmd_generate_grid(gen);
    if (*b) return cmd_bench(bench);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const NetworkError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInputError;
}
