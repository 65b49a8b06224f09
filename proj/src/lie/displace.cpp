#include "solenoid/lie/displace.hpp"

#include "solenoid/error.hpp"

namespace solenoid::lie {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_at(std::size_t n, std::size_t index) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t row = n - i - 1;
        if (index < row) return {i, i + 1 + index};
        index -= row;
    }
    throw invalid_input("pair index out of range");
}

TwoVector wedge(const RVector& x, const RVector& y) {
    if (x.size() != y.size()) throw invalid_input("wedge factors differ in dimension");
    const std::size_t n = x.size();
    TwoVector out;
    out.coords.assign(pair_count(n), Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out.coords[pair_index(n, i, j)] = x[i] * y[j] - x[j] * y[i];
    out.decomposition = Decomposition{x, y};
    return out;
}

TwoForm::TwoForm(RationalMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw invalid_input("a 2-form needs a square matrix");
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (m_(i, j) != -m_(j, i)) throw invalid_input("2-form matrix is not antisymmetric");
}

void TwoForm::set(std::size_t i, std::size_t j, const Rational& v) {
    if (i == j && sgn(v) != 0) throw invalid_input("2-form must vanish on the diagonal");
    m_(i, j) = v;
    m_(j, i) = -v;
}

Rational TwoForm::evaluate(const RVector& x, const RVector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw invalid_input("vector has the wrong dimension");
    Rational sum = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (sgn(x[i]) == 0) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (sgn(y[j]) != 0 && sgn(m_(i, j)) != 0) sum += x[i] * m_(i, j) * y[j];
    }
    return sum;
}

RVector TwoForm::as_pair_vector() const {
    const std::size_t n = dim();
    RVector out(pair_count(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out[pair_index(n, i, j)] = m_(i, j);
    return out;
}

bool TwoForm::is_zero() const { return lie::is_zero(as_pair_vector()); }

RationalMatrix bracket_map(const LieAlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    RationalMatrix L(n, pair_count(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) L(k, pair_index(n, i, j)) = alg.c(i, j, k);
    return L;
}

std::vector<TwoVector> kernel_L(const LieAlgebraSpec& alg) {
    std::vector<TwoVector> out;
    for (auto& v : nullspace(bracket_map(alg))) out.push_back({std::move(v), std::nullopt});
    return out;
}

GenerationCertificate verify_decomposable_generation(const LieAlgebraSpec& alg,
                                                     std::span<const TwoVector> candidates) {
    const std::size_t n = alg.dim();
    const RationalMatrix L = bracket_map(alg);

    GenerationCertificate cert;
    cert.candidate_count = candidates.size();
    cert.rank_L = rank(L);
    cert.kernel_dimension = pair_count(n) - cert.rank_L;

    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const TwoVector& v = candidates[c];
        const std::string label = "candidate " + std::to_string(c + 1);
        if (v.coords.size() != pair_count(n)) throw invalid_input(label + " has the wrong length");
        if (!v.decomposition) throw invalid_input(label + " carries no decomposition");
        if (wedge(v.decomposition->x, v.decomposition->y).coords != v.coords)
            throw invalid_input(label + ": decomposition does not reproduce the coordinates");
    }

    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const Decomposition& d = *candidates[c].decomposition;
        if (!is_zero(alg.bracket(d.x, d.y))) {
            cert.failure = "candidate " + std::to_string(c + 1) + ": [x, y] != 0";
            return cert;
        }
        if (!is_zero(L.apply(candidates[c].coords))) {
            cert.failure = "candidate " + std::to_string(c + 1) + " is not in Ker L";
            return cert;
        }
    }

    std::vector<RVector> rows;
    for (const auto& v : candidates) rows.push_back(v.coords);
    cert.span_rank = rows.empty() ? 0 : rank(RationalMatrix::from_rows(rows, pair_count(n)));
    if (cert.span_rank != cert.kernel_dimension) {
        cert.failure = "candidates span a subspace of dimension " + std::to_string(cert.span_rank) +
                       " in a kernel of dimension " + std::to_string(cert.kernel_dimension);
        return cert;
    }
    cert.ok = true;
    return cert;
}

std::optional<RVector> exact_primitive(const LieAlgebraSpec& alg, const TwoForm& omega) {
    if (omega.dim() != alg.dim()) throw invalid_input("2-form and algebra differ in dimension");
    return solve(bracket_map(alg).transpose(), omega.as_pair_vector());
}

RVector primitive_residual(const LieAlgebraSpec& alg, const TwoForm& omega, const RVector& b) {
    if (omega.dim() != alg.dim() || b.size() != alg.dim()) throw invalid_input("dimension mismatch");
    RVector r = omega.as_pair_vector();
    const RVector db = bracket_map(alg).transpose().apply(b);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= db[k];
    return r;
}

RationalMatrix ce_d1(const LieAlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    RationalMatrix d(pair_count(n), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) d(pair_index(n, i, j), k) = -alg.c(i, j, k);
    return d;
}

RationalMatrix ce_d2(const LieAlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    std::size_t triples = 0;
    if (n >= 3) triples = n * (n - 1) * (n - 2) / 6;
    RationalMatrix d(triples, pair_count(n));

    // Adds coef * omega([e_a, e_b], e_c) to row r.
    auto add_term = [&](std::size_t r, const Rational& coef, std::size_t a, std::size_t b, std::size_t c) {
        for (std::size_t l = 0; l < n; ++l) {
            const Rational& cab = alg.c(a, b, l);
            if (sgn(cab) == 0 || l == c) continue;
            if (l < c)
                d(r, pair_index(n, l, c)) += coef * cab;
            else
                d(r, pair_index(n, c, l)) -= coef * cab;
        }
    };

    std::size_t r = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k, ++r) {
                add_term(r, -1, i, j, k);
                add_term(r, 1, i, k, j);
                add_term(r, -1, j, k, i);
            }
    return d;
}

std::size_t ce_b2(const LieAlgebraSpec& alg) {
    const std::size_t n = alg.dim();
    const std::size_t closed = pair_count(n) - (n >= 3 ? rank(ce_d2(alg)) : 0);
    return closed - rank(ce_d1(alg));
}

std::optional<Decomposition> decompose(std::size_t n, const RVector& coords) {
    if (coords.size() != pair_count(n)) throw invalid_input("2-vector has the wrong length");
    for (std::size_t idx = 0; idx < coords.size(); ++idx) {
        if (sgn(coords[idx]) == 0) continue;
        const auto [p, q] = pair_at(n, idx);
        // For decomposable w with w_pq != 0: w = (i_p w / w_pq) ^ (i_q w).
        auto contraction = [&](std::size_t a) {
            RVector v(n);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == a) continue;
                v[k] = a < k ? coords[pair_index(n, a, k)] : -coords[pair_index(n, k, a)];
            }
            return v;
        };
        RVector x = contraction(p);
        for (auto& v : x) v /= coords[idx];
        RVector y = contraction(q);
        if (wedge(x, y).coords != coords) return std::nullopt;
        return Decomposition{std::move(x), std::move(y)};
    }
    return std::nullopt;
}

std::optional<Decomposition> find_displacing_pair(const LieAlgebraSpec& alg, const TwoForm& omega,
                                                  std::span<const TwoVector> generators) {
    const std::size_t n = alg.dim();
    if (omega.dim() != n) throw invalid_input("2-form and algebra differ in dimension");

    auto hit = [&](const Decomposition& d) {
        return sgn(omega.evaluate(d.x, d.y)) != 0 && is_zero(alg.bracket(d.x, d.y));
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sgn(omega(i, j)) == 0 || !is_zero(alg.bracket_basis(i, j))) continue;
            RVector x(n), y(n);
            x[i] = 1;
            y[j] = 1;
            return Decomposition{std::move(x), std::move(y)};
        }

    for (const auto& g : generators) {
        std::optional<Decomposition> d = g.decomposition ? g.decomposition : decompose(n, g.coords);
        if (d && hit(*d)) return d;
    }

    for (const auto& k : kernel_L(alg)) {
        const std::optional<Decomposition> d = decompose(n, k.coords);
        if (d && hit(*d)) return d;
    }
    return std::nullopt;
}

}  // namespace solenoid::lie
