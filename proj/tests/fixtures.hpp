#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "pmc/instances.hpp"

#ifndef PMC_FIXTURE_DIR
#error "PMC_FIXTURE_DIR must be defined"
#endif

namespace pmc::testing {

inline std::string fixture_path(const std::string& name) { return std::string(PMC_FIXTURE_DIR) + "/" + name; }

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline ParametricNetwork load(const std::string& name) { return parse_pmax(read_fixture(name)); }

// Vertex ids of the fixtures, 0-based.
namespace f1 {
inline constexpr VertexId s = 0, t = 1, v = 2;
}
namespace f2 {
inline constexpr VertexId s = 0, t = 1, a = 2, b = 3;
}

}  // namespace pmc::testing
