#pragma once

// Dense matrices over Q and fraction-free Gauss-Jordan elimination.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

namespace solenoid::lie {

using Rational = mpq_class;
using RVector = std::vector<Rational>;

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RVector row(std::size_t r) const;
    RVector apply(const RVector& x) const;
    RationalMatrix transpose() const;

    static RationalMatrix from_rows(const std::vector<RVector>& rows, std::size_t cols);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form kept over Z: every row is primitive, its pivot
/// is positive, and each pivot column is zero outside its pivot row.
struct IntegerEchelon {
    std::size_t cols = 0;
    std::vector<std::vector<mpz_class>> rows;
    std::vector<std::size_t> pivots;  // pivot column of each row, increasing
};

IntegerEchelon reduced_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column (that entry set to 1).
std::vector<RVector> nullspace(const RationalMatrix& m);

/// Canonical solution of m x = b with every free variable set to zero, or
/// nullopt when the system is inconsistent.
std::optional<RVector> solve(const RationalMatrix& m, const RVector& b);

bool is_zero(const RVector& v);

}  // namespace solenoid::lie
