#ifndef BRUNONF_FIELD_PARSER_HPP
#define BRUNONF_FIELD_PARSER_HPP

#include <string>
#include <vector>

#include "brunonf/derivation.hpp"

namespace brunonf {

// Parsed problem file: `vars:`, optional `scalars:` and `truncation:` headers
// followed by a vector-field expression over + - * ^ ( ), rational literals,
// the imaginary unit i, variables, and d<var> differentials.
struct ProblemSpec {
  std::vector<std::string> vars;
  ScalarKind kind = ScalarKind::Rational;
  int order = 16;
  std::vector<Series> components;  // coefficient of d/d<var>, order + 1
  LogDerivation field;
};

ProblemSpec parse_field(const std::string& text);

// Comma-separated eigenvalue list; kind inferred: decimals -> float,
// i -> Gaussian rationals, else exact rationals.
std::vector<Scalar> parse_lambda(const std::string& csv);

std::string format_field(const LogDerivation& d, const std::vector<std::string>& vars);

}  // namespace brunonf

#endif
