#pragma once

// The bracket map L : Lambda^2 g -> g and what it decides about left-invariant
// 2-forms: exactness (Omega = b o L), the second Chevalley-Eilenberg Betti
// number, and commuting pairs on which Omega does not vanish.
//
// Lambda^2 g has the basis e_i ^ e_j (i < j) in lexicographic order.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "solenoid/lie/algebra.hpp"

namespace solenoid::lie {

std::size_t pair_count(std::size_t n);
std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);  // requires i < j
std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index);

struct Decomposition {
    RVector x;
    RVector y;
};

struct TwoVector {
    RVector coords;  // length n(n-1)/2
    std::optional<Decomposition> decomposition;
};

/// x ^ y with its decomposition attached.
TwoVector wedge(const RVector& x, const RVector& y);

/// Antisymmetric n x n rational matrix, Omega(e_i, e_j) = entry (i, j).
class TwoForm {
public:
    explicit TwoForm(std::size_t n) : m_(n, n) {}
    /// Throws Error(invalid_input) unless m is square and antisymmetric.
    explicit TwoForm(RationalMatrix m);

    std::size_t dim() const { return m_.rows(); }
    const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
    /// Sets entry (i, j) and its partner (j, i).
    void set(std::size_t i, std::size_t j, const Rational& v);

    Rational evaluate(const RVector& x, const RVector& y) const;
    /// Coordinates Omega(e_i, e_j), i < j; pairing with a TwoVector.
    RVector as_pair_vector() const;
    bool is_zero() const;

private:
    RationalMatrix m_;
};

/// Matrix of L (n rows, one column per basis 2-vector).
RationalMatrix bracket_map(const LieAlgebraSpec& alg);

/// Exact basis of Ker L (no decompositions attached).
std::vector<TwoVector> kernel_L(const LieAlgebraSpec& alg);

struct GenerationCertificate {
    bool ok = false;
    std::string failure;  // empty when ok
    std::size_t candidate_count = 0;
    std::size_t rank_L = 0;
    std::size_t kernel_dimension = 0;
    std::size_t span_rank = 0;  // rank of the candidates' coordinates
};

/// Checks (a) [x, y] = 0 for every candidate, (b) L(candidate) = 0, (c) the
/// candidates span Ker L. Throws Error(invalid_input) when a candidate has no
/// decomposition or its decomposition does not reproduce its coordinates.
///
/// A failure means only that these candidates do not generate the kernel;
/// it says nothing about whether some other decomposable set does.
GenerationCertificate verify_decomposable_generation(const LieAlgebraSpec& alg,
                                                     std::span<const TwoVector> candidates);

/// Canonical b (free coordinates zero) with Omega(x, y) = b([x, y]), or
/// nullopt when Omega is not exact.
std::optional<RVector> exact_primitive(const LieAlgebraSpec& alg, const TwoForm& omega);

/// Omega - d b, evaluated on the basis 2-vectors; zero iff b is a primitive.
RVector primitive_residual(const LieAlgebraSpec& alg, const TwoForm& omega, const RVector& b);

/// Matrices of the Chevalley-Eilenberg differentials d1 : g* -> Lambda^2 g*
/// and d2 : Lambda^2 g* -> Lambda^3 g* (triples i < j < k in lex order).
RationalMatrix ce_d1(const LieAlgebraSpec& alg);
RationalMatrix ce_d2(const LieAlgebraSpec& alg);

/// b2 = dim Ker d2 - rank d1.
std::size_t ce_b2(const LieAlgebraSpec& alg);

/// Returns a commuting pair (x, y) with Omega(x, y) != 0. Searches, in order,
/// commuting basis pairs, the given generators, and those kernel basis
/// vectors that happen to be decomposable. nullopt when all are exhausted.
std::optional<Decomposition> find_displacing_pair(const LieAlgebraSpec& alg, const TwoForm& omega,
                                                  std::span<const TwoVector> generators = {});

/// x ^ y has rank 2 as an antisymmetric matrix exactly when it is
/// decomposable and nonzero; returns such x, y.
std::optional<Decomposition> decompose(std::size_t n, const RVector& coords);

}  // namespace solenoid::lie
