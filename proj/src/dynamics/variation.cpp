#include "solenoid/variation.hpp"

#include <algorithm>
#include <cmath>

#include "rk4.hpp"
#include "solenoid/error.hpp"

namespace solenoid {

using detail::Vec;

VariationState variation_field(const VariationState& x, Intensity s) {
    const double eu = std::exp(x.u);
    return {
        x.nu,
        x.tau,
        eu * x.a0,
        x.a1 / eu,
        x.a1 * x.a1 - x.a0 * x.a0 - s.s * x.tau,
        s.s * x.nu,
        x.nu * x.a0,
        -x.nu * x.a1,
    };
}

VariationIntegrals variation_integrals(const VariationState& x, Intensity s) {
    VariationIntegrals out;
    out.hamiltonian = 0.5 * (x.nu * x.nu + x.tau * x.tau + x.a0 * x.a0 + x.a1 * x.a1);
    out.product = x.a0 * x.a1;
    out.twisted_a0 = s.s != 0.0 ? x.a0 * std::exp(-x.tau / s.s) : 0.0;
    out.tau_shift = x.tau - s.s * x.u;
    return out;
}

namespace {

void require_step(double h) {
    if (!(h > 0.0) || h > kMaxStep) throw invalid_input("step size must lie in (0, 0.1]");
}

long long whole_steps(double t, double h) { return static_cast<long long>(std::floor(t / h * (1.0 + 1e-12))); }

}  // namespace

VariationTrajectory variation_integrate(const VariationState& x0, Intensity s, double t_end, double h,
                                        bool keep_samples) {
    require_step(h);
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw invalid_input("t_end must be positive");
    if (!detail::all_finite(x0.as_array())) throw numerical_error("non-finite state");

    auto field = [s](const Vec<8>& v) { return variation_field(VariationState::from_array(v), s).as_array(); };

    VariationTrajectory traj;
    if (keep_samples) traj.samples.push_back({0.0, x0});
    const VariationIntegrals ref = variation_integrals(x0, s);

    Vec<8> x = x0.as_array();
    auto advance = [&](double step, double t) {
        x = detail::rk4_step(x, step, field);
        if (!detail::all_finite(x)) throw numerical_error("non-finite state");
        const VariationState state = VariationState::from_array(x);
        const VariationIntegrals now = variation_integrals(state, s);
        traj.hamiltonian_drift = std::max(traj.hamiltonian_drift, std::abs(now.hamiltonian - ref.hamiltonian));
        traj.product_drift = std::max(traj.product_drift, std::abs(now.product - ref.product));
        traj.twisted_a0_drift = std::max(traj.twisted_a0_drift, std::abs(now.twisted_a0 - ref.twisted_a0));
        traj.tau_shift_drift = std::max(traj.tau_shift_drift, std::abs(now.tau_shift - ref.tau_shift));
        if (keep_samples) traj.samples.push_back({t, state});
    };
    const long long n = whole_steps(t_end, h);
    for (long long i = 1; i <= n; ++i) advance(h, static_cast<double>(i) * h);
    const double remainder = t_end - static_cast<double>(n) * h;
    if (remainder > 1e-12 * h) advance(remainder, t_end);

    traj.final_state = VariationState::from_array(x);
    return traj;
}

namespace {

// Momenta (nu, tau, a0, a1) followed by the left-frame tangent vector. The
// left frame absorbs every e^(+-u), so u itself is not needed.
using TangentSystem = Vec<12>;

TangentSystem tangent_field(const TangentSystem& z, Intensity s) {
    const double nu = z[0], tau = z[1], a0 = z[2], a1 = z[3];
    const double* w = z.data() + 4;
    return {
        a1 * a1 - a0 * a0 - s.s * tau,
        s.s * nu,
        nu * a0,
        -nu * a1,
        w[4],
        w[5],
        -nu * w[2] + a0 * w[0] + w[6],
        nu * w[3] - a1 * w[0] + w[7],
        -2.0 * a0 * w[6] + 2.0 * a1 * w[7] - s.s * w[5],
        s.s * w[4],
        a0 * w[4] + nu * w[6],
        -a1 * w[4] - nu * w[7],
    };
}

TangentSystem pack(const VariationState& x, const VariationTangent& w) {
    return {x.nu, x.tau, x.a0, x.a1, w[0], w[1], w[2], w[3], w[4], w[5], w[6], w[7]};
}

}  // namespace

VariationTangent propagate_variation_tangent(const VariationState& x0, const VariationTangent& w0, Intensity s,
                                             double t, double h) {
    require_step(h);
    if (!(t >= 0.0)) throw invalid_input("propagation time must be non-negative");
    TangentSystem z = pack(x0, w0);
    auto field = [s](const TangentSystem& v) { return tangent_field(v, s); };
    const long long n = whole_steps(t, h);
    for (long long i = 0; i < n; ++i) z = detail::rk4_step(z, h, field);
    const double remainder = t - static_cast<double>(n) * h;
    if (remainder > 1e-12 * h) z = detail::rk4_step(z, remainder, field);
    if (!detail::all_finite(z)) throw numerical_error("non-finite state");
    VariationTangent out;
    std::copy(z.begin() + 4, z.end(), out.begin());
    return out;
}

double variation_lyapunov(const VariationState& x0, Intensity s, double t_end, const VariationLyapunovOptions& options) {
    require_step(options.h);
    if (!(t_end > 0.0) || !(options.renorm_interval > 0.0)) throw invalid_input("times must be positive");
    if (!(options.transient_fraction >= 0.0 && options.transient_fraction < 1.0))
        throw invalid_input("transient fraction must lie in [0, 1)");
    if (!detail::all_finite(x0.as_array())) throw numerical_error("non-finite state");

    VariationTangent w0;
    w0.fill(1.0 / std::sqrt(8.0));
    TangentSystem z = pack(x0, w0);
    auto field = [s](const TangentSystem& v) { return tangent_field(v, s); };

    const auto steps_per_block = std::max<long long>(1, std::llround(options.renorm_interval / options.h));
    const double block = static_cast<double>(steps_per_block) * options.h;
    const auto blocks = std::max<long long>(1, std::llround(t_end / block));
    const auto skipped = static_cast<long long>(std::floor(options.transient_fraction * static_cast<double>(blocks)));

    double log_growth = 0.0;
    for (long long b = 0; b < blocks; ++b) {
        for (long long i = 0; i < steps_per_block; ++i) z = detail::rk4_step(z, options.h, field);
        if (!detail::all_finite(z)) throw numerical_error("non-finite state");
        double len = 0.0;
        for (std::size_t k = 4; k < 12; ++k) len += z[k] * z[k];
        len = std::sqrt(len);
        for (std::size_t k = 4; k < 12; ++k) z[k] /= len;
        if (b >= skipped) log_growth += std::log(len);
    }
    return log_growth / (static_cast<double>(blocks - skipped) * block);
}

}  // namespace solenoid
