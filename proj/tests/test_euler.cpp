#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "solenoid/error.hpp"
#include "solenoid/euler.hpp"

using namespace solenoid;

namespace {

EulerPoint random_sphere_point(std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    return project_to_sphere({g(rng), g(rng), g(rng)});
}

double distance(EulerPoint a, EulerPoint b) { return norm(a - b); }

// Global error at t = 10 of integrate_orbit with step h, measured against
// the run with step h / 2.
double halving_error(EulerPoint p0, Intensity s, double h) {
    const EulerPoint coarse = integrate_orbit(p0, s, 10.0, h).samples.back().p;
    const EulerPoint fine = integrate_orbit(p0, s, 10.0, h / 2).samples.back().p;
    return distance(coarse, fine);
}

}  // namespace

TEST_CASE("casimir and hamiltonian on reference points") {
    const double a = std::sqrt(0.32);
    CHECK(casimir({1, 0, 0}, {0.6}) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(casimir({0, 1, 0}, {0.6}) == 0.0);
    CHECK(casimir({0.6, a, a}, {0.6}) == doctest::Approx(0.5 * (1 + 0.36)).epsilon(1e-15));

    CHECK(hamiltonian({1, 0, 0}) == 0.5);
    CHECK(hamiltonian({0, 0, 0}) == 0.0);
    CHECK(hamiltonian({0.6, a, a}) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("euler field on reference points") {
    const double a = std::sqrt(0.32);
    CHECK(euler_field({1, 0, 0}, {0.6}) == EulerPoint{0, 0, 0});
    CHECK(norm(euler_field({0.6, a, a}, {0.6})) < 1e-15);
    const EulerPoint e = euler_field({0, 1, 0}, {0.5});
    CHECK(e.nu == -1.0);
    CHECK(e.a0 == 0.0);
    CHECK(e.a1 == 0.5);
}

TEST_CASE("field is tangent to the sphere and to the Casimir levels") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 2000; ++k) {
        const EulerPoint p = random_sphere_point(rng);
        const Intensity s{std::uniform_real_distribution<double>(-5, 5)(rng)};
        const EulerPoint e = euler_field(p, s);
        CHECK(std::abs(dot(p, e)) < 1e-14);
        CHECK(std::abs(dot(casimir_gradient(p, s), e)) < 1e-13);
    }
}

TEST_CASE("rk4_project_step") {
    SUBCASE("stationary point is preserved") {
        CHECK(rk4_project_step({1, 0, 0}, {0.6}, 1e-3) == EulerPoint{1, 0, 0});
    }
    SUBCASE("result lies on the sphere") {
        std::mt19937_64 rng(3);
        for (int k = 0; k < 500; ++k) {
            const EulerPoint q = rk4_project_step(random_sphere_point(rng), {0.6}, 1e-3);
            CHECK(std::abs(norm(q) - 1.0) <= 1e-15);
        }
    }
    SUBCASE("Casimir drift per step and agreement with two half steps") {
        const EulerPoint p{0, 1, 0};
        const Intensity s{0.5};
        const EulerPoint full = rk4_project_step(p, s, 1e-3);
        const EulerPoint halves = rk4_project_step(rk4_project_step(p, s, 5e-4), s, 5e-4);
        CHECK(std::abs(casimir(full, s) - casimir(p, s)) < 1e-12);
        // Local error O(h^5): the two results differ by far less than h^4.
        CHECK(distance(full, halves) < 1e-13);
    }
    SUBCASE("rejects bad input") {
        const double nan = std::nan("");
        CHECK_THROWS_AS(rk4_project_step({nan, 0, 1}, {0.6}, 1e-3), Error);
        try {
            rk4_project_step({nan, 0, 1}, {0.6}, 1e-3);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::numerical);
            CHECK(std::string(e.what()) == "non-finite state");
        }
        CHECK_THROWS_AS(rk4_project_step({0, 1, 0}, {0.6}, 0.0), Error);
        CHECK_THROWS_AS(rk4_project_step({0, 1, 0}, {0.6}, 0.2), Error);
        CHECK_THROWS_AS(rk4_project_step({0, 2, 0}, {0.6}, 1e-3), Error);
    }
}

TEST_CASE("integrate_orbit") {
    SUBCASE("elliptic point stays put") {
        const double a = std::sqrt(0.32);
        const EulerPoint p0 = project_to_sphere({0.6, a, a});
        const OrbitRecord rec = integrate_orbit(p0, {0.6}, 5.0);
        for (const auto& q : rec.samples) CHECK(distance(q.p, p0) <= 1e-12);
    }
    SUBCASE("Casimir drift over 100 time units") {
        const OrbitRecord rec = integrate_orbit({0, 1, 0}, {0.6}, 100.0, 1e-3);
        CHECK(rec.casimir_drift <= 1e-9);
        CHECK(rec.samples.size() == 100001);
        CHECK(rec.samples.back().t == doctest::Approx(100.0).epsilon(1e-15));
        for (std::size_t i = 0; i < rec.samples.size(); i += 997) CHECK(on_sphere(rec.samples[i].p));
    }
    SUBCASE("unmagnetized fixed point on the curve a0 a1 = 1/2") {
        const double r = std::sqrt(0.5);
        const OrbitRecord rec = integrate_orbit({0, r, r}, {0.0}, 10.0);
        for (const auto& q : rec.samples) CHECK(std::abs(q.p.a0 * q.p.a1 - 0.5) < 1e-12);
    }
    SUBCASE("remainder step lands on t_end") {
        const OrbitRecord rec = integrate_orbit({0, 1, 0}, {0.6}, 0.0125, 1e-2);
        REQUIRE(rec.samples.size() == 3);
        CHECK(rec.samples.back().t == 0.0125);
    }
    SUBCASE("rejects non-positive t_end") { CHECK_THROWS_AS(integrate_orbit({0, 1, 0}, {0.6}, 0.0), Error); }
}

TEST_CASE("observed global order of the integrator is four") {
    const EulerPoint p0{0, 1, 0};
    const Intensity s{0.6};
    const double e1 = halving_error(p0, s, 0.05);
    const double e2 = halving_error(p0, s, 0.025);
    const double e3 = halving_error(p0, s, 0.0125);
    CHECK(std::log2(e1 / e2) >= 3.8);
    CHECK(std::log2(e2 / e3) >= 3.8);
}

TEST_CASE("critical point classification") {
    SUBCASE("0 < s < 1") {
        const auto report = classify_critical_points({0.6});
        int elliptic = 0;
        int hyperbolic = 0;
        for (const auto& c : report.points) {
            CHECK(norm(euler_field(c.point, {0.6})) < 1e-15);
            CHECK(c.f == doctest::Approx(casimir(c.point, {0.6})).epsilon(1e-14));
            if (c.kind == CriticalKind::hyperbolic) {
                ++hyperbolic;
                CHECK(std::abs(c.f) == doctest::Approx(0.6));
            } else {
                ++elliptic;
                CHECK(std::abs(c.f) == doctest::Approx(0.68));
                CHECK(std::abs(c.point.a0) == doctest::Approx(0.565685).epsilon(1e-6));
            }
        }
        CHECK(elliptic == 4);
        CHECK(hyperbolic == 2);
    }
    SUBCASE("|s| > 1") {
        const auto report = classify_critical_points({2.0});
        REQUIRE(report.points.size() == 2);
        for (const auto& c : report.points) {
            CHECK(c.kind != CriticalKind::hyperbolic);
            CHECK(c.kind != CriticalKind::degenerate);
            CHECK(std::abs(c.f) == 2.0);
            CHECK(std::abs(c.point.nu) == 1.0);
        }
    }
    SUBCASE("|s| = 1") {
        const auto report = classify_critical_points({-1.0});
        REQUIRE(report.points.size() == 2);
        for (const auto& c : report.points) {
            CHECK(c.kind == CriticalKind::degenerate);
            CHECK(std::abs(c.f) == 1.0);
        }
    }
    SUBCASE("s = 0 is rejected") {
        try {
            classify_critical_points({0.0});
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::invalid_input);
            CHECK(std::string(e.what()) == "unmagnetized case excluded");
        }
    }
    SUBCASE("casimir range") {
        CHECK(casimir_max({0.6}) == doctest::Approx(0.68));
        CHECK(casimir_min({0.6}) == doctest::Approx(-0.68));
        CHECK(casimir_max({-3.0}) == 3.0);
    }
}

TEST_CASE("the field vanishes only at the classified points") {
    std::mt19937_64 rng(5);
    for (double sv : {0.6, -0.3, 2.0, 1.0}) {
        const Intensity s{sv};
        const auto report = classify_critical_points(s);
        for (int k = 0; k < 10000; ++k) {
            const EulerPoint p = random_sphere_point(rng);
            double nearest = 10.0;
            for (const auto& c : report.points) nearest = std::min(nearest, distance(p, c.point));
            if (nearest > 1e-3) CHECK(norm(euler_field(p, s)) > 0.0);
        }
    }
}

TEST_CASE("gradient pairing") {
    CHECK(gradient_pairing({0, 1, 0}, {2.0}) == 2.0);
    CHECK(gradient_pairing({1, 0, 0}, {0.7}) == 0.0);
    CHECK(gradient_pairing({-1, 0, 0}, {3.0}) == 0.0);
    const double a = std::sqrt(0.375);
    CHECK(gradient_pairing({0.5, a, a}, {2.0}) == doctest::Approx(1.875).epsilon(1e-14));

    SUBCASE("sign-definite for |s| > 1") {
        std::mt19937_64 rng(8);
        for (double sv : {1.5, -1.5, 4.0}) {
            for (int k = 0; k < 5000; ++k) {
                const EulerPoint p = random_sphere_point(rng);
                const double g = gradient_pairing(p, {sv}) * (sv > 0 ? 1.0 : -1.0);
                CHECK(g >= 0.0);
                if (std::abs(std::abs(p.nu) - 1.0) > 1e-6) CHECK(g > 0.0);
                CHECK(nu_rate_along_gradient(p, {sv}) * (sv > 0 ? 1.0 : -1.0) > 0.0);
            }
        }
    }
}

TEST_CASE("rate of nu along the gradient flow matches a finite difference") {
    // Integrate p' = grad_S f with RK4 and difference nu.
    std::mt19937_64 rng(21);
    for (double sv : {0.6, 2.0, -1.7}) {
        const Intensity s{sv};
        for (int k = 0; k < 50; ++k) {
            const EulerPoint p = random_sphere_point(rng);
            auto step = [&](EulerPoint q, double h) {
                const EulerPoint k1 = casimir_sphere_gradient(q, s);
                const EulerPoint k2 = casimir_sphere_gradient(q + (h / 2) * k1, s);
                const EulerPoint k3 = casimir_sphere_gradient(q + (h / 2) * k2, s);
                const EulerPoint k4 = casimir_sphere_gradient(q + h * k3, s);
                return q + (h / 6) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            };
            const double h = 1e-5;
            const double fd = (step(p, h).nu - step(p, -h).nu) / (2 * h);
            CHECK(fd == doctest::Approx(nu_rate_along_gradient(p, s)).epsilon(1e-7).scale(1.0));
        }
    }
}

TEST_CASE("linearization at the elliptic point has purely imaginary eigenvalues") {
    // Jacobian of the field by central differences; eigenvalues via Eigen.
    const double sv = 0.6;
    const double a = std::sqrt(0.5 * (1 - sv * sv));
    const EulerPoint p{sv, a, a};
    Eigen::Matrix3d J;
    const double d = 1e-6;
    for (int j = 0; j < 3; ++j) {
        EulerPoint plus = p, minus = p;
        double* cp = j == 0 ? &plus.nu : j == 1 ? &plus.a0 : &plus.a1;
        double* cm = j == 0 ? &minus.nu : j == 1 ? &minus.a0 : &minus.a1;
        *cp += d;
        *cm -= d;
        const EulerPoint e = (1.0 / (2 * d)) * (euler_field(plus, {sv}) - euler_field(minus, {sv}));
        J(0, j) = e.nu;
        J(1, j) = e.a0;
        J(2, j) = e.a1;
    }
    const Eigen::Vector3cd ev = J.eigenvalues();
    double max_imag = 0.0;
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(ev[i].real()) < 1e-8);
        max_imag = std::max(max_imag, std::abs(ev[i].imag()));
    }
    CHECK(max_imag == doctest::Approx(std::sqrt(2 * (1 - sv * sv))).epsilon(1e-8));
}
