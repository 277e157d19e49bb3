#include <algorithm>
#include <limits>
#include <sstream>

#include "pmc/instances.hpp"
#include "text_util.hpp"

namespace pmc {

namespace {

// Keeps normalization of a hostile header within a few gigabytes.
constexpr std::int64_t kMaxVertices = std::int64_t{1} << 24;

}  // namespace

NetworkSpec parse_pmax_spec(std::string_view text) {
  NetworkSpec spec;
  bool have_problem = false;
  bool parametric = false;
  bool have_interval = false;
  std::int64_t declared_arcs = 0;
  VertexId source = -1;
  VertexId sink = -1;
  std::size_t lineno = 0;

  auto vertex = [&](std::string_view tok) {
    const std::int64_t id = text::to_int(tok, lineno);
    if (id < 1 || id > spec.num_vertices) throw ParseError(lineno, "vertex id out of range: " + std::string(tok));
    return static_cast<VertexId>(id - 1);
  };

  for (std::string_view line : text::split_lines(text)) {
    ++lineno;
    const auto tok = text::tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0].size() != 1) throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");

    const char kind = tok[0][0];
    if (!have_problem && kind != 'p') throw ParseError(lineno, "expected problem line before '" + std::string(tok[0]) + "'");
    switch (kind) {
      case 'p': {
        if (have_problem) throw ParseError(lineno, "duplicate problem line");
        if (tok.size() != 4 || (tok[1] != "pmax" && tok[1] != "max"))
          throw ParseError(lineno, "expected 'p pmax <n> <m>' or 'p max <n> <m>'");
        parametric = tok[1] == "pmax";
        const std::int64_t n = text::to_int(tok[2], lineno);
        declared_arcs = text::to_int(tok[3], lineno);
        if (n < 2 || n > kMaxVertices) throw ParseError(lineno, "bad vertex count");
        if (declared_arcs < 0 || declared_arcs > std::numeric_limits<ArcId>::max() / 4)
          throw ParseError(lineno, "bad arc count");
        spec.num_vertices = static_cast<VertexId>(n);
        spec.arcs.reserve(static_cast<std::size_t>(std::min<std::int64_t>(declared_arcs, 1 << 20)));
        have_problem = true;
        break;
      }
      case 'n': {
        if (tok.size() != 3 || (tok[2] != "s" && tok[2] != "t")) throw ParseError(lineno, "expected 'n <id> s|t'");
        VertexId& slot = tok[2] == "s" ? source : sink;
        if (slot >= 0) throw ParseError(lineno, std::string("duplicate ") + (tok[2] == "s" ? "source" : "sink"));
        slot = vertex(tok[1]);
        break;
      }
      case 'l': {
        if (tok.size() != 3) throw ParseError(lineno, "expected 'l <lambda_min> <lambda_max>'");
        if (have_interval) throw ParseError(lineno, "duplicate interval line");
        if (!spec.arcs.empty()) throw ParseError(lineno, "interval line must precede arcs");
        spec.lambda_min = text::to_double(tok[1], lineno);
        spec.lambda_max = text::to_double(tok[2], lineno);
        if (!(spec.lambda_min < spec.lambda_max)) throw ParseError(lineno, "empty parameter interval");
        have_interval = true;
        break;
      }
      case 'a': {
        if (parametric && !have_interval) throw ParseError(lineno, "arc before interval line");
        ArcSpec arc;
        if (tok.size() < 4) throw ParseError(lineno, "arc line too short");
        arc.tail = vertex(tok[1]);
        arc.head = vertex(tok[2]);
        if (tok.size() == 4 && tok[3] == "inf") {
          arc.cap = AffineFn::unbounded();
        } else if (parametric) {
          if (tok.size() != 5) throw ParseError(lineno, "expected 'a <tail> <head> <slope> <intercept>'");
          arc.cap = AffineFn::linear(text::to_double(tok[3], lineno), text::to_double(tok[4], lineno));
        } else {
          if (tok.size() != 4) throw ParseError(lineno, "expected 'a <tail> <head> <cap>'");
          arc.cap = AffineFn::constant(text::to_double(tok[3], lineno));
        }
        if (static_cast<std::int64_t>(spec.arcs.size()) >= declared_arcs)
          throw ParseError(lineno, "more arcs than declared");
        spec.arcs.push_back(arc);
        break;
      }
      default:
        throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }

  if (!have_problem) throw ParseError(0, "missing problem line");
  if (source < 0) throw ParseError(0, "missing source line");
  if (sink < 0) throw ParseError(0, "missing sink line");
  if (source == sink) throw ParseError(0, "source and sink coincide");
  if (static_cast<std::int64_t>(spec.arcs.size()) != declared_arcs)
    throw ParseError(0, "expected " + std::to_string(declared_arcs) + " arcs, found " + std::to_string(spec.arcs.size()));
  if (!parametric && !have_interval) {
    spec.lambda_min = 0.0;
    spec.lambda_max = 1.0;
  } else if (!have_interval) {
    throw ParseError(0, "missing interval line");
  }
  spec.source = source;
  spec.sink = sink;
  return spec;
}

ParametricNetwork parse_pmax(std::string_view text) {
  const NetworkSpec spec = parse_pmax_spec(text);
  try {
    ParametricNetwork net = normalize(spec);
    const auto violations = check_monotone(net);
    if (!violations.empty()) {
      const auto& v = violations.front();
      throw ParseError(0, std::string("monotonicity violation (") + to_string(v.rule) + ") on arc " +
                              std::to_string(net.tail(v.arc) + 1) + " -> " + std::to_string(net.head(v.arc) + 1));
    }
    return net;
  } catch (const NetworkError& e) {
    throw ParseError(0, e.what());
  }
}

std::string write_pmax(const ParametricNetwork& net, const std::vector<std::string>& comments) {
  std::ostringstream body;
  std::size_t m = 0;
  for (ArcId e = 0; e < net.num_arcs(); ++e) {
    const AffineFn& c = net.cap(e);
    if (c.is_zero()) continue;
    ++m;
    body << "a " << net.tail(e) + 1 << ' ' << net.head(e) + 1 << ' ';
    if (c.infinite) body << "inf\n";
    else body << text::format(c.slope) << ' ' << text::format(c.intercept) << '\n';
  }
  std::ostringstream out;
  for (const std::string& c : comments) out << "c " << c << '\n';
  out << "p pmax " << net.num_vertices() << ' ' << m << '\n';
  out << "n " << net.source() + 1 << " s\n";
  out << "n " << net.sink() + 1 << " t\n";
  out << "l " << text::format(net.lambda_min()) << ' ' << text::format(net.lambda_max()) << '\n';
  out << body.str();
  return out.str();
}

}  // namespace pmc
