#include "solenoid/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "solenoid/error.hpp"

namespace solenoid {

Matrix2 multiply(const Matrix2& a, const Matrix2& b) {
    Matrix2 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

Matrix2 inverse(const Matrix2& a) {
    const double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    if (det == 0.0) throw numerical_error("singular matrix");
    return {{{a[1][1] / det, -a[0][1] / det}, {-a[1][0] / det, a[0][0] / det}}};
}

Matrix2 to_real(const IntMatrix2& a) {
    return {{{static_cast<double>(a[0][0]), static_cast<double>(a[0][1])},
             {static_cast<double>(a[1][0]), static_cast<double>(a[1][1])}}};
}

LatticeSpec lattice_from_matrix(const IntMatrix2& A) {
    // Keeps the integer determinant free of overflow.
    constexpr std::int64_t limit = std::int64_t{1} << 30;
    for (const auto& row : A)
        for (auto v : row)
            if (v > limit || v < -limit) throw invalid_input("matrix entries too large");
    const std::int64_t det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    const std::int64_t tr = A[0][0] + A[1][1];
    if (det != 1 || (tr <= 2 && tr >= -2)) throw invalid_input("not a hyperbolic SL(2,Z) matrix");

    LatticeSpec out;
    out.A = A;
    const double t = std::abs(static_cast<double>(tr));
    out.lambda = 0.5 * (t + std::sqrt(t * t - 4.0));
    const double sign = tr > 0 ? 1.0 : -1.0;
    out.eigenvalues = {sign * out.lambda, sign / out.lambda};

    // Both (c, mu - a) and (mu - d, b) solve v A = mu v, and b, c != 0 for
    // every hyperbolic A (b = 0 or c = 0 would make a, d integer units with
    // a + d = +-2). The longer candidate avoids cancellation in mu - a.
    const double a = static_cast<double>(A[0][0]);
    const double b = static_cast<double>(A[0][1]);
    const double c = static_cast<double>(A[1][0]);
    const double d = static_cast<double>(A[1][1]);
    for (int k = 0; k < 2; ++k) {
        const double mu = out.eigenvalues[k];
        double v0 = c;
        double v1 = mu - a;
        if (std::hypot(mu - d, b) > std::hypot(v0, v1)) {
            v0 = mu - d;
            v1 = b;
        }
        const double len = std::hypot(v0, v1);
        if (v0 < 0.0) {
            v0 = -v0;
            v1 = -v1;
        }
        out.P[k] = {v0 / len, v1 / len};
    }

    const double detP = out.P[0][0] * out.P[1][1] - out.P[0][1] * out.P[1][0];
    out.volume = std::log(out.lambda) * std::abs(detP);

    const Matrix2 D = multiply(multiply(out.P, to_real(A)), inverse(out.P));
    out.diagonal_residual = std::max({std::abs(D[0][0] - out.eigenvalues[0]), std::abs(D[1][1] - out.eigenvalues[1]),
                                      std::abs(D[0][1]), std::abs(D[1][0])});
    return out;
}

}  // namespace solenoid
