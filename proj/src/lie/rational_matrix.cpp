#include "solenoid/lie/rational_matrix.hpp"

#include <algorithm>
#include <utility>

#include "solenoid/error.hpp"

namespace solenoid::lie {

RVector RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RVector RationalMatrix::apply(const RVector& x) const {
    if (x.size() != cols_) throw invalid_input("dimension mismatch in matrix-vector product");
    RVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn((*this)(r, c)) != 0 && sgn(x[c]) != 0) y[r] += (*this)(r, c) * x[c];
    return y;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RVector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw invalid_input("ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

bool is_zero(const RVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

namespace {

using IntRow = std::vector<mpz_class>;

void make_primitive(IntRow& row) {
    mpz_class g = 0;
    for (const auto& v : row)
        if (sgn(v) != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : row)
            if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

IntRow integer_row(const RationalMatrix& m, std::size_t r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(r, c)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    IntRow row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (sgn(m(r, c)) != 0) row[c] = m(r, c).get_num() * (l / m(r, c).get_den());
    make_primitive(row);
    return row;
}

}  // namespace

IntegerEchelon reduced_echelon(const RationalMatrix& m) {
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        IntRow row = integer_row(m, r);
        if (std::any_of(row.begin(), row.end(), [](const mpz_class& v) { return sgn(v) != 0; }))
            rows.push_back(std::move(row));
    }

    IntegerEchelon out;
    out.cols = m.cols();
    std::size_t next = 0;
    for (std::size_t c = 0; c < m.cols() && next < rows.size(); ++c) {
        // Smallest nonzero entry as pivot keeps coefficients small.
        std::size_t best = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r)
            if (sgn(rows[r][c]) != 0 && (best == rows.size() || abs(rows[r][c]) < abs(rows[best][c]))) best = r;
        if (best == rows.size()) continue;
        std::swap(rows[next], rows[best]);
        IntRow& piv = rows[next];
        if (sgn(piv[c]) < 0)
            for (auto& v : piv) v = -v;

        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || sgn(rows[r][c]) == 0) continue;
            IntRow& row = rows[r];
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), piv[c].get_mpz_t(), row[c].get_mpz_t());
            const mpz_class a = piv[c] / g;
            const mpz_class b = row[c] / g;
            for (std::size_t k = 0; k < row.size(); ++k) {
                if (sgn(piv[k]) == 0) {
                    if (sgn(row[k]) != 0) row[k] *= a;
                } else {
                    row[k] = a * row[k] - b * piv[k];
                }
            }
            make_primitive(row);
        }
        out.pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank(const RationalMatrix& m) { return reduced_echelon(m).rows.size(); }

std::vector<RVector> nullspace(const RationalMatrix& m) {
    const IntegerEchelon e = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;

    std::vector<RVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        RVector x(m.cols());
        x[f] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) {
            const auto& row = e.rows[r];
            if (sgn(row[f]) == 0) continue;
            x[e.pivots[r]] = Rational(-row[f], row[e.pivots[r]]);
            x[e.pivots[r]].canonicalize();
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<RVector> solve(const RationalMatrix& m, const RVector& b) {
    if (b.size() != m.rows()) throw invalid_input("dimension mismatch in linear solve");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const IntegerEchelon e = reduced_echelon(aug);
    RVector x(m.cols());
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
        const std::size_t p = e.pivots[r];
        if (p == m.cols()) return std::nullopt;
        x[p] = Rational(e.rows[r][m.cols()], e.rows[r][p]);
        x[p].canonicalize();
    }
    return x;
}

}  // namespace solenoid::lie
