#pragma once

// Built-in algebras and cataloged decomposable generators of their Ker L.
//
//   heisenberg(n)        x1..xn, y1..yn, z        [x_i, y_i] = z
//   g2n1(n)              x1..xn, y1..yn, z        [z, x_i] = y_i
//   upper_triangular(n)  e_ij, i < j (lex order)  [e_ij, e_jl] = e_il
//   sol                  X0, X1, U                [U, X0] = X0, [U, X1] = -X1
//   sol_x_r              X0, X1, U, T             sol plus a central T
//   abelian(n)           e1..en

#include <string>
#include <string_view>
#include <vector>

#include "solenoid/lie/algebra.hpp"
#include "solenoid/lie/displace.hpp"

namespace solenoid::lie {

/// n is ignored for sol and sol_x_r. Ranges: upper_triangular 2..6,
/// heisenberg and g2n1 1..10, abelian 1..21. Throws Error(invalid_input) on
/// an unknown name or out-of-range n.
LieAlgebraSpec builtin_algebra(std::string_view name, int n = 0);

bool builtin_needs_n(std::string_view name);

std::vector<std::string> builtin_names();

/// Decomposable 2-vectors that generate Ker L for the built-in algebra: every
/// commuting pair of basis vectors, plus
///   heisenberg: (x_i + y_1) ^ (x_1 + y_i), i = 2..n;
///   upper_triangular: (e_ij + e_kl) ^ (e_jl + e_ik) for i < j < l,
///   i < k < l, j != k (the two brackets e_il and -e_il cancel).
std::vector<TwoVector> builtin_kernel_generators(std::string_view name, int n = 0);

}  // namespace solenoid::lie
