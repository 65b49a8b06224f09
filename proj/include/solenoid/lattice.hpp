#pragma once

// Lattices of Sol from hyperbolic elements of SL(2, Z).

#include <array>
#include <cstdint>

namespace solenoid {

using IntMatrix2 = std::array<std::array<std::int64_t, 2>, 2>;
using Matrix2 = std::array<std::array<double, 2>, 2>;

struct LatticeSpec {
    IntMatrix2 A{};
    double lambda = 0.0;  // expanding eigenvalue modulus, > 1
    // Rows are unit-length left eigenvectors of A (first component > 0), so
    // P A P^-1 = diag(eigenvalues[0], eigenvalues[1]).
    Matrix2 P{};
    // sign(tr A) * (lambda, 1/lambda); equal to (lambda, 1/lambda) when tr A > 2.
    std::array<double, 2> eigenvalues{};
    double volume = 0.0;             // log(lambda) * |det P|
    double diagonal_residual = 0.0;  // max |(P A P^-1 - diag)_ij|
};

/// Throws Error(invalid_input, "not a hyperbolic SL(2,Z) matrix") unless
/// det A = 1 and |tr A| > 2.
LatticeSpec lattice_from_matrix(const IntMatrix2& A);

Matrix2 multiply(const Matrix2& a, const Matrix2& b);
Matrix2 inverse(const Matrix2& a);
Matrix2 to_real(const IntMatrix2& a);

}  // namespace solenoid
