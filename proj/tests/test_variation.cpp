#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "solenoid/error.hpp"
#include "solenoid/variation.hpp"

using namespace solenoid;

namespace {

VariationState random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    return {0.3 * g(rng), g(rng), g(rng), g(rng), g(rng), g(rng), g(rng), g(rng)};
}

VariationState displace(const VariationState& x, const VariationTangent& w, double eps) {
    const double eu = std::exp(x.u);
    return {x.u + eps * w[0],      x.t + eps * w[1],   x.y0 + eps * w[2] * eu, x.y1 + eps * w[3] / eu,
            x.nu + eps * w[4],     x.tau + eps * w[5], x.a0 + eps * w[6],      x.a1 + eps * w[7]};
}

VariationTangent left_difference(const VariationState& a, const VariationState& b) {
    const double eu = std::exp(a.u);
    return {b.u - a.u,   b.t - a.t,     (b.y0 - a.y0) / eu, (b.y1 - a.y1) * eu,
            b.nu - a.nu, b.tau - a.tau, b.a0 - a.a0,        b.a1 - a.a1};
}

std::array<double, 4> integral_values(const VariationState& x, Intensity s) {
    const VariationIntegrals I = variation_integrals(x, s);
    return {I.hamiltonian, I.product, I.twisted_a0, I.tau_shift};
}

}  // namespace

TEST_CASE("field on a reference state") {
    const VariationState f = variation_field({0, 0, 0, 0, 0.5, 0.2, 0.6, 0.8}, {2.0});
    CHECK(f.u == doctest::Approx(0.5));
    CHECK(f.t == doctest::Approx(0.2));
    CHECK(f.y0 == doctest::Approx(0.6));
    CHECK(f.y1 == doctest::Approx(0.8));
    CHECK(f.nu == doctest::Approx(0.64 - 0.36 - 0.4));
    CHECK(f.tau == doctest::Approx(1.0));
    CHECK(f.a0 == doctest::Approx(0.3));
    CHECK(f.a1 == doctest::Approx(-0.4));
}

TEST_CASE("integrals are annihilated by the field") {
    // Directional derivative of each integral along the field, by central
    // differences in the coordinates.
    std::mt19937_64 rng(3);
    for (double sv : {0.5, -1.3, 4.0}) {
        const Intensity s{sv};
        for (int k = 0; k < 200; ++k) {
            const VariationState x = random_state(rng);
            const auto f = variation_field(x, s).as_array();
            const auto base = x.as_array();
            const double d = 1e-6;
            auto p = base, m = base;
            for (int i = 0; i < 8; ++i) {
                p[i] += d * f[i];
                m[i] -= d * f[i];
            }
            const auto ip = integral_values(VariationState::from_array(p), s);
            const auto im = integral_values(VariationState::from_array(m), s);
            const auto i0 = integral_values(x, s);
            for (int q = 0; q < 4; ++q)
                CHECK(std::abs(ip[q] - im[q]) / (2 * d) <= 1e-6 * (1.0 + std::abs(i0[q]) + std::abs(sv)));
        }
    }
}

TEST_CASE("integral drift over a long run") {
    std::mt19937_64 rng(4);
    for (double sv : {0.5, 2.0, -1.0}) {
        for (int k = 0; k < 3; ++k) {
            VariationState x0 = random_state(rng);
            // Keep the run away from exponential blow-up of y.
            x0.nu *= 0.3;
            x0.tau *= 0.3;
            x0.a0 *= 0.3;
            x0.a1 *= 0.3;
            const VariationTrajectory traj = variation_integrate(x0, {sv}, 50.0, 1e-3);
            CHECK(traj.hamiltonian_drift <= 1e-8);
            CHECK(traj.product_drift <= 1e-8);
            CHECK(traj.twisted_a0_drift <= 1e-8);
            CHECK(traj.tau_shift_drift <= 1e-8);
        }
    }
}

TEST_CASE("twisted integral is zero without a field") {
    const VariationIntegrals I = variation_integrals({0, 0, 0, 0, 0.1, 0.2, 0.3, 0.4}, {0.0});
    CHECK(I.twisted_a0 == 0.0);
    CHECK(I.tau_shift == doctest::Approx(0.2));
    CHECK(I.product == doctest::Approx(0.12));
}

TEST_CASE("Lyapunov exponent of a generic orbit is small") {
    const VariationState x0{0, 0, 0, 0, 0.3, 0.2, 0.7, 0.5};
    const double lambda = variation_lyapunov(x0, {0.5}, 500.0);
    CHECK(std::abs(lambda) <= 1e-2);
}

TEST_CASE("without the field the Anosov orbit keeps its exponent") {
    const VariationState x0{0, 0, 0, 0, 1.0, 0, 0, 0};
    CHECK(variation_lyapunov(x0, {0.0}, 200.0) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("relative equilibrium: exponent bounded by the linearization") {
    // nu = 0 and s tau = a1^2 - a0^2 fix the momenta; u stays constant, so
    // the coordinate Jacobian is constant along the orbit.
    const double s = 0.5, a0 = 0.6, a1 = 0.3;
    const VariationState x0{0, 0, 0, 0, 0.0, (a1 * a1 - a0 * a0) / s, a0, a1};
    const auto f0 = variation_field(x0, {s});
    CHECK(std::abs(f0.nu) <= 1e-15);
    CHECK(std::abs(f0.tau) <= 1e-15);

    Eigen::Matrix<double, 8, 8> J;
    const double d = 1e-6;
    for (int j = 0; j < 8; ++j) {
        auto p = x0.as_array(), m = x0.as_array();
        p[j] += d;
        m[j] -= d;
        const auto fp = variation_field(VariationState::from_array(p), {s}).as_array();
        const auto fm = variation_field(VariationState::from_array(m), {s}).as_array();
        for (int i = 0; i < 8; ++i) J(i, j) = (fp[i] - fm[i]) / (2 * d);
    }
    double max_real = -1e300;
    const Eigen::Matrix<std::complex<double>, 8, 1> ev = J.eigenvalues();
    for (int i = 0; i < 8; ++i) max_real = std::max(max_real, ev[i].real());
    CHECK(std::abs(max_real) <= 1e-4);

    const double lambda = variation_lyapunov(x0, {s}, 400.0);
    CHECK(lambda <= max_real + 2e-2);
    CHECK(lambda >= -2e-2);
}

TEST_CASE("tangent propagation agrees with finite differences") {
    const double eps = 1e-8;
    std::mt19937_64 rng(8);
    std::normal_distribution<double> g;
    for (double sv : {0.0, 0.5, -2.0}) {
        VariationState x0 = random_state(rng);
        for (double* v : {&x0.nu, &x0.tau, &x0.a0, &x0.a1}) *v *= 0.5;
        VariationTangent w0;
        for (auto& v : w0) v = g(rng);
        const double t = 4.0;
        const VariationTangent w = propagate_variation_tangent(x0, w0, {sv}, t);
        const VariationState a = variation_integrate(x0, {sv}, t).final_state;
        const VariationState b = variation_integrate(displace(x0, w0, eps), {sv}, t).final_state;
        const VariationTangent fd = left_difference(a, b);
        double err = 0.0, size = 0.0;
        for (int i = 0; i < 8; ++i) {
            err = std::max(err, std::abs(fd[i] / eps - w[i]));
            size = std::max(size, std::abs(w[i]));
        }
        CHECK(err <= 1e-5 * std::max(1.0, size));
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(variation_integrate({}, {0.5}, 0.0), Error);
    CHECK_THROWS_AS(variation_integrate({}, {0.5}, 1.0, 1.0), Error);
    VariationLyapunovOptions bad;
    bad.transient_fraction = 1.0;
    CHECK_THROWS_AS(variation_lyapunov({0, 0, 0, 0, 1, 0, 0, 0}, {0.5}, 10.0, bad), Error);
}
