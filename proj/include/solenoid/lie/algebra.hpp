#pragma once

// Finite-dimensional Lie algebras over Q given by structure constants.

#include <cstddef>
#include <string>
#include <vector>

#include "solenoid/lie/rational_matrix.hpp"

namespace solenoid::lie {

inline constexpr std::size_t kMaxDimension = 21;

/// c(i, j, k) = value, i.e. [e_i, e_j] contains value * e_k (0-based).
struct StructureConstant {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Rational value;
};

class LieAlgebraSpec;

/// Builds and validates an algebra. Each constant also fixes its
/// antisymmetric partner c(j, i, k) = -c(i, j, k); a pair listed twice must
/// agree, and c(i, i, k) must vanish (Error invalid_input otherwise). A
/// Jacobi failure throws Error(domain). Empty names default to e1..en.
LieAlgebraSpec make_algebra(std::size_t dim, std::vector<std::string> names,
                            const std::vector<StructureConstant>& constants);

/// [e_i, e_j] = sum_k c(i, j, k) e_k. Always antisymmetric and Jacobi.
class LieAlgebraSpec {
public:
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }

    /// Coordinates of [e_i, e_j].
    RVector bracket_basis(std::size_t i, std::size_t j) const;
    RVector bracket(const RVector& x, const RVector& y) const;

    /// Every nonzero c(i, j, k) with i < j.
    std::vector<StructureConstant> nonzero_constants() const;

private:
    friend LieAlgebraSpec make_algebra(std::size_t, std::vector<std::string>, const std::vector<StructureConstant>&);

    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    std::vector<Rational> c_;
};

/// The same algebra written in the basis e_i' = factors[i] * e_i.
LieAlgebraSpec rescale(const LieAlgebraSpec& alg, const RVector& factors);

/// Dimensions of g, [g, g], [[g, g], [g, g]], ... until the series is stable.
std::vector<std::size_t> derived_series_dimensions(const LieAlgebraSpec& alg);

bool is_solvable(const LieAlgebraSpec& alg);

}  // namespace solenoid::lie
