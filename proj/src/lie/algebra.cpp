#include "solenoid/lie/algebra.hpp"

#include "solenoid/error.hpp"

namespace solenoid::lie {

RVector LieAlgebraSpec::bracket_basis(std::size_t i, std::size_t j) const {
    RVector out(dim_);
    for (std::size_t k = 0; k < dim_; ++k) out[k] = c(i, j, k);
    return out;
}

RVector LieAlgebraSpec::bracket(const RVector& x, const RVector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw invalid_input("vector has the wrong dimension");
    RVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (i == j || sgn(y[j]) == 0) continue;
            const Rational w = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (sgn(c(i, j, k)) != 0) out[k] += w * c(i, j, k);
        }
    }
    return out;
}

std::vector<StructureConstant> LieAlgebraSpec::nonzero_constants() const {
    std::vector<StructureConstant> out;
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            for (std::size_t k = 0; k < dim_; ++k)
                if (sgn(c(i, j, k)) != 0) out.push_back({i, j, k, c(i, j, k)});
    return out;
}

LieAlgebraSpec make_algebra(std::size_t dim, std::vector<std::string> names,
                            const std::vector<StructureConstant>& constants) {
    if (dim == 0 || dim > kMaxDimension)
        throw invalid_input("dimension must lie in 1.." + std::to_string(kMaxDimension));
    if (names.empty())
        for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
    if (names.size() != dim) throw invalid_input("expected " + std::to_string(dim) + " basis names");

    LieAlgebraSpec alg;
    alg.dim_ = dim;
    alg.names_ = std::move(names);
    alg.c_.assign(dim * dim * dim, Rational(0));
    std::vector<bool> seen(dim * dim * dim, false);
    auto at = [dim](std::size_t i, std::size_t j, std::size_t k) { return (i * dim + j) * dim + k; };

    for (const auto& sc : constants) {
        if (sc.i >= dim || sc.j >= dim || sc.k >= dim) throw invalid_input("structure constant index out of range");
        if (sc.i == sc.j) {
            if (sgn(sc.value) != 0) throw invalid_input("[e_i, e_i] must vanish");
            continue;
        }
        const std::size_t a = at(sc.i, sc.j, sc.k);
        const std::size_t b = at(sc.j, sc.i, sc.k);
        if (seen[a] && alg.c_[a] != sc.value)
            throw invalid_input("conflicting structure constants for (" + std::to_string(sc.i + 1) + ", " +
                                std::to_string(sc.j + 1) + ", " + std::to_string(sc.k + 1) + ")");
        seen[a] = seen[b] = true;
        alg.c_[a] = sc.value;
        alg.c_[b] = -sc.value;
    }

    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k)
                for (std::size_t m = 0; m < dim; ++m) {
                    Rational sum = 0;
                    auto add = [&sum](const Rational& x, const Rational& y) {
                        if (sgn(x) != 0 && sgn(y) != 0) sum += x * y;
                    };
                    for (std::size_t l = 0; l < dim; ++l) {
                        add(alg.c(j, k, l), alg.c(i, l, m));
                        add(alg.c(k, i, l), alg.c(j, l, m));
                        add(alg.c(i, j, l), alg.c(k, l, m));
                    }
                    if (sgn(sum) != 0)
                        throw domain_error("Jacobi identity fails for (" + alg.names_[i] + ", " + alg.names_[j] +
                                           ", " + alg.names_[k] + ")");
                }
    return alg;
}

LieAlgebraSpec rescale(const LieAlgebraSpec& alg, const RVector& factors) {
    const std::size_t n = alg.dim();
    if (factors.size() != n) throw invalid_input("one factor per basis vector expected");
    for (const auto& f : factors)
        if (sgn(f) == 0) throw invalid_input("rescaling factors must be nonzero");
    std::vector<StructureConstant> constants;
    for (const auto& sc : alg.nonzero_constants())
        constants.push_back({sc.i, sc.j, sc.k, sc.value * factors[sc.i] * factors[sc.j] / factors[sc.k]});
    return make_algebra(n, alg.basis_names(), constants);
}

std::vector<std::size_t> derived_series_dimensions(const LieAlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    std::vector<RVector> basis;
    for (std::size_t i = 0; i < n; ++i) {
        RVector e(n);
        e[i] = 1;
        basis.push_back(std::move(e));
    }
    std::vector<std::size_t> dims{n};
    while (!basis.empty()) {
        std::vector<RVector> brackets;
        for (std::size_t a = 0; a < basis.size(); ++a)
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                RVector v = alg.bracket(basis[a], basis[b]);
                if (!is_zero(v)) brackets.push_back(std::move(v));
            }
        std::vector<RVector> next;
        if (!brackets.empty()) {
            const IntegerEchelon e = reduced_echelon(RationalMatrix::from_rows(brackets, n));
            for (const auto& row : e.rows) {
                RVector v(n);
                for (std::size_t k = 0; k < n; ++k) v[k] = row[k];
                next.push_back(std::move(v));
            }
        }
        if (next.size() == basis.size()) break;
        basis = std::move(next);
        dims.push_back(basis.size());
    }
    return dims;
}

bool is_solvable(const LieAlgebraSpec& alg) { return derived_series_dimensions(alg).back() == 0; }

}  // namespace solenoid::lie
