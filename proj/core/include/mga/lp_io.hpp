#pragma once

#include <iosfwd>
#include <string>

#include "mga/lp.hpp"

namespace mga {

// Plain-text LP matrix format. Grammar (one record per line, '#' comments):
//
//   vars <n> constraints <m> sense <min|max>
//   obj <j>:<coeff> ...
//   c<i>: <j>:<coeff> ... <rel> <rhs>         (m lines, rel in {<=, >=, =})
//   bounds <j> <lo> <hi>                      (n lines; -inf / inf allowed)
//
// Coefficients are written with up to 12 significant digits; decimal
// literals with <= 12 significant digits round-trip bit-stably.
std::string write_lp_text(const LinearProgram& lp);
void write_lp_file(const LinearProgram& lp, const std::string& path);

LinearProgram read_lp_text(const std::string& text);
LinearProgram read_lp_file(const std::string& path);

// %.12g rendering used across text outputs
std::string format_coeff(double v);

}  // namespace mga
