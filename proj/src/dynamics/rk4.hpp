#pragma once

// Fixed-size state vectors and one classical Runge-Kutta step.

#include <array>
#include <cmath>
#include <cstddef>

namespace solenoid::detail {

template <std::size_t N>
using Vec = std::array<double, N>;

template <std::size_t N>
Vec<N> axpy(const Vec<N>& x, double a, const Vec<N>& y) {
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = x[i] + a * y[i];
    return out;
}

template <std::size_t N, class Field>
Vec<N> rk4_step(const Vec<N>& x, double h, Field&& field) {
    const Vec<N> k1 = field(x);
    const Vec<N> k2 = field(axpy(x, 0.5 * h, k1));
    const Vec<N> k3 = field(axpy(x, 0.5 * h, k2));
    const Vec<N> k4 = field(axpy(x, h, k3));
    Vec<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = x[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

template <std::size_t N>
bool all_finite(const Vec<N>& x) {
    for (double v : x)
        if (!std::isfinite(v)) return false;
    return true;
}

template <std::size_t N>
double euclidean_norm(const Vec<N>& x) {
    double acc = 0.0;
    for (double v : x) acc += v * v;
    return std::sqrt(acc);
}

}  // namespace solenoid::detail
