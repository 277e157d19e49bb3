#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "pmc/instances.hpp"
#include "text_util.hpp"

namespace pmc {

FaceGraph parse_face_graph(std::string_view text) {
  FaceGraph fg;
  std::vector<bool> seen;
  std::set<std::pair<std::int32_t, std::int32_t>> pairs;
  struct PendingEdge {
    FaceAdjacency adj;
    std::size_t line;
  };
  std::vector<PendingEdge> edges;
  std::size_t lineno = 0;

  for (std::string_view line : text::split_lines(text)) {
    ++lineno;
    const auto tok = text::tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "f") {
      if (tok.size() != 5) throw ParseError(lineno, "expected 'f <id> <polygon|triangle> <area> <outer_len>'");
      const std::int64_t id = text::to_int(tok[1], lineno);
      if (id < 1 || id > (std::int64_t{1} << 24)) throw ParseError(lineno, "face id out of range");
      Face face;
      if (tok[2] == "polygon") face.kind = FaceKind::Polygon;
      else if (tok[2] == "triangle") face.kind = FaceKind::Triangle;
      else throw ParseError(lineno, "unknown face kind '" + std::string(tok[2]) + "'");
      face.area = text::to_double(tok[3], lineno);
      face.outer_len = text::to_double(tok[4], lineno);
      if (face.area < 0.0 || face.outer_len < 0.0) throw ParseError(lineno, "negative area or length");
      const auto idx = static_cast<std::size_t>(id - 1);
      if (idx >= fg.faces.size()) {
        fg.faces.resize(idx + 1);
        seen.resize(idx + 1, false);
      }
      if (seen[idx]) throw ParseError(lineno, "duplicate face id");
      seen[idx] = true;
      fg.faces[idx] = face;
    } else if (tok[0] == "e") {
      if (tok.size() != 4) throw ParseError(lineno, "expected 'e <i> <j> <shared_len>'");
      FaceAdjacency adj;
      const std::int64_t i = text::to_int(tok[1], lineno);
      const std::int64_t j = text::to_int(tok[2], lineno);
      if (i < 1 || j < 1 || i > (std::int64_t{1} << 24) || j > (std::int64_t{1} << 24))
        throw ParseError(lineno, "face id out of range");
      if (i == j) throw ParseError(lineno, "face adjacent to itself");
      adj.i = static_cast<std::int32_t>(i);
      adj.j = static_cast<std::int32_t>(j);
      adj.shared_len = text::to_double(tok[3], lineno);
      if (!(adj.shared_len > 0.0)) throw ParseError(lineno, "shared length must be positive");
      if (!pairs.insert({std::min(adj.i, adj.j), std::max(adj.i, adj.j)}).second)
        throw ParseError(lineno, "duplicate adjacency");
      edges.push_back({adj, lineno});
    } else {
      throw ParseError(lineno, "unknown line type '" + std::string(tok[0]) + "'");
    }
  }
  if (fg.faces.empty()) throw ParseError(0, "no faces");
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) throw ParseError(0, "face ids must be consecutive from 1; missing " + std::to_string(k + 1));
  for (const PendingEdge& e : edges) {
    if (e.adj.i > static_cast<std::int32_t>(fg.faces.size()) || e.adj.j > static_cast<std::int32_t>(fg.faces.size()))
      throw ParseError(e.line, "adjacency refers to unknown face");
    fg.adjacencies.push_back(e.adj);
  }
  return fg;
}

std::string write_face_graph(const FaceGraph& fg) {
  std::ostringstream out;
  for (std::size_t k = 0; k < fg.faces.size(); ++k) {
    const Face& f = fg.faces[k];
    out << "f " << k + 1 << ' ' << (f.kind == FaceKind::Polygon ? "polygon" : "triangle") << ' '
        << text::format(f.area) << ' ' << text::format(f.outer_len) << '\n';
  }
  for (const FaceAdjacency& a : fg.adjacencies)
    out << "e " << a.i << ' ' << a.j << ' ' << text::format(a.shared_len) << '\n';
  return out.str();
}

ParametricNetwork build_aggregation_network(const FaceGraph& fg, double lambda_max) {
  const auto faces = static_cast<VertexId>(fg.faces.size());
  NetworkSpec spec;
  spec.num_vertices = faces + 2;
  spec.source = 0;
  spec.sink = 1;
  spec.lambda_min = 0.0;
  spec.lambda_max = lambda_max;
  spec.arcs.reserve(2 * fg.faces.size() + 2 * fg.adjacencies.size());
  for (VertexId k = 0; k < faces; ++k) {
    const Face& f = fg.faces[k];
    if (f.area < 0.0 || f.outer_len < 0.0) throw NetworkError("face with negative area or length");
    spec.arcs.push_back({0, k + 2, AffineFn::linear(f.area, f.outer_len)});
    if (f.kind == FaceKind::Polygon) spec.arcs.push_back({k + 2, 1, AffineFn::unbounded()});
  }
  for (const FaceAdjacency& a : fg.adjacencies) {
    if (a.i < 1 || a.j < 1 || a.i > faces || a.j > faces || a.i == a.j || !(a.shared_len > 0.0))
      throw NetworkError("malformed face adjacency");
    spec.arcs.push_back({a.i + 1, a.j + 1, AffineFn::constant(a.shared_len)});
    spec.arcs.push_back({a.j + 1, a.i + 1, AffineFn::constant(a.shared_len)});
  }
  return normalize(spec);
}

}  // namespace pmc
