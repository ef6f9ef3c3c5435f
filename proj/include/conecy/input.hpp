#pragma once

// Text input formats.
//
// Subdivision file (one item per line, '#' starts a comment):
//     dim 3
//     quotient 7 1 4              # r a_2 ... a_n (the leading weight 1 is implicit)
//     cone 1 1 1 | 0 1 0 | 0 0 1  # n generators separated by '|'
//
// Run file for the radial solver: `key = value` lines with keys
//     n r C s0 w c                       (required)
//     s_min s_max nodes t_steps newton_tol max_halvings max_newton_iterations

#include "conecy/quotient.hpp"
#include "conecy/radial.hpp"

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace conecy {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

struct SubdivisionFile {
  int dim = 0;
  std::optional<CyclicQuotient> quotient;
  std::vector<std::vector<IntVector>> cones;
};

SubdivisionFile parse_subdivision(std::istream& in);

struct RunFile {
  radial::PathConfig config;
  double s_min = 1e-2;
  double s_max = 1e4;
  long nodes = 2048;
};

RunFile parse_run_file(std::istream& in);

}  // namespace conecy
