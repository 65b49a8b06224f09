#pragma once

// Plain-text structure constants.
//
//   # comment
//   dim 3              optional; otherwise the largest index used
//   names X0 X1 U      optional
//   3 1 1 1            c[3][1][1] = 1, i.e. [e3, e1] = e1 (1-based)
//   3 2 2 -1/1
//
// Each line "i j k p/q" also implies c[j][i][k] = -p/q.

#include <istream>
#include <string>

#include "solenoid/lie/algebra.hpp"

namespace solenoid::lie {

/// Throws Error(invalid_input) on malformed text (with the line number) and
/// Error(domain) when the constants violate the Jacobi identity.
LieAlgebraSpec parse_structure_constants(std::istream& in);

LieAlgebraSpec load_structure_constants(const std::string& path);

}  // namespace solenoid::lie
