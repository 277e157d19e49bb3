#include <cmath>
#include <string>

#include "pmc/instances.hpp"
#include "text_util.hpp"

namespace pmc {

std::string export_breakpoints_csv(const BreakpointFunction& bp) {
  std::string out = "vertex,breakpoint\n";
  for (std::size_t v = 0; v < bp.beta.size(); ++v) {
    out += std::to_string(v + 1);
    out += ',';
    out += text::format(bp.beta[v]);
    out += '\n';
  }
  return out;
}

BreakpointFunction parse_breakpoints_csv(std::string_view text) {
  BreakpointFunction bp;
  std::size_t lineno = 0;
  bool header = false;
  for (std::string_view line : text::split_lines(text)) {
    ++lineno;
    if (line.empty()) continue;
    if (!header) {
      if (line != "vertex,breakpoint") throw ParseError(lineno, "expected header 'vertex,breakpoint'");
      header = true;
      continue;
    }
    const auto fields = text::split(line, ',');
    if (fields.size() != 2) throw ParseError(lineno, "expected two fields");
    const std::int64_t id = text::to_int(fields[0], lineno);
    if (id != static_cast<std::int64_t>(bp.beta.size()) + 1)
      throw ParseError(lineno, "vertex ids must be consecutive from 1");
    bp.beta.push_back(fields[1] == "inf" ? kInf : text::to_double(fields[1], lineno));
  }
  if (!header) throw ParseError(0, "missing header");
  return bp;
}

}  // namespace pmc
