#include "solenoid/sol_dynamics.hpp"

#include <cmath>

#include "rk4.hpp"
#include "solenoid/error.hpp"

namespace solenoid {

using detail::Vec;

SolState sol_field(const SolState& x, Intensity s) {
    const EulerPoint m = euler_field(x.momentum(), s);
    const double eu = std::exp(x.u);
    return {x.nu, eu * x.a0, x.a1 / eu, m.nu, m.a0, m.a1};
}

SolIntegrals sol_integrals(const SolState& x, Intensity s) {
    const double eu = std::exp(x.u);
    return {hamiltonian(x.momentum()), x.a0 / eu + s.s * x.y1, eu * x.a1 - s.s * x.y0};
}

namespace {

void require_step(double h) {
    if (!(h > 0.0) || h > kMaxStep) throw invalid_input("step size must lie in (0, 0.1]");
}

}  // namespace

SolTrajectory sol_integrate(const SolState& x0, Intensity s, double t_end, double h, bool keep_samples) {
    require_step(h);
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw invalid_input("t_end must be positive");
    if (!detail::all_finite(x0.as_array())) throw numerical_error("non-finite state");

    auto field = [s](const Vec<6>& v) { return sol_field(SolState::from_array(v), s).as_array(); };

    SolTrajectory traj;
    if (keep_samples) traj.samples.push_back({0.0, x0});
    const SolIntegrals ref = sol_integrals(x0, s);

    const auto full_steps = static_cast<long long>(std::floor(t_end / h * (1.0 + 1e-12)));
    const double remainder = t_end - static_cast<double>(full_steps) * h;

    Vec<6> x = x0.as_array();
    auto advance = [&](double step, double t) {
        x = detail::rk4_step(x, step, field);
        if (!detail::all_finite(x)) throw numerical_error("non-finite state");
        const SolState state = SolState::from_array(x);
        const SolIntegrals now = sol_integrals(state, s);
        traj.hamiltonian_drift = std::max(traj.hamiltonian_drift, std::abs(now.hamiltonian - ref.hamiltonian));
        traj.p_y0_drift = std::max(traj.p_y0_drift, std::abs(now.p_y0_integral - ref.p_y0_integral));
        traj.p_y1_drift = std::max(traj.p_y1_drift, std::abs(now.p_y1_integral - ref.p_y1_integral));
        if (keep_samples) traj.samples.push_back({t, state});
    };
    for (long long i = 1; i <= full_steps; ++i) advance(h, static_cast<double>(i) * h);
    if (remainder > 1e-12 * h) advance(remainder, t_end);

    traj.final_state = SolState::from_array(x);
    return traj;
}

ClosedOrbit reconstruct_closed_orbit(Intensity s, const PeriodOptions& options) {
    if (!std::isfinite(s.s)) throw invalid_input("intensity must be finite");
    if (s.s == 0.0) throw invalid_input("unmagnetized case excluded");

    const EulerPoint seed = seed_on_level(s, 0.0);
    const OrbitRecord rec = detect_period(seed, s, options);
    if (!rec.converged || !rec.period) throw numerical_error("no closed Euler orbit located");

    ClosedOrbit orbit;
    orbit.start = {0.0, 0.0, 0.0, seed.nu, seed.a0, seed.a1};
    orbit.period = *rec.period;
    orbit.end = sol_integrate(orbit.start, s, orbit.period, effective_step(options, s)).final_state;

    const Vec<6> a = orbit.start.as_array();
    const Vec<6> b = orbit.end.as_array();
    Vec<6> diff;
    for (std::size_t i = 0; i < 6; ++i) diff[i] = b[i] - a[i];
    orbit.closure_error = detail::euclidean_norm(diff);
    return orbit;
}

namespace {

// Momenta followed by the left-frame tangent vector.
using TangentSystem = Vec<9>;

TangentSystem tangent_field(const TangentSystem& z, Intensity s) {
    const double nu = z[0];
    const double a0 = z[1];
    const double a1 = z[2];
    const EulerPoint m = euler_field({nu, a0, a1}, s);
    const double* w = z.data() + 3;
    return {
        m.nu,
        m.a0,
        m.a1,
        w[3],
        -nu * w[1] + a0 * w[0] + w[4],
        nu * w[2] - a1 * w[0] + w[5],
        -2.0 * a0 * w[4] + 2.0 * a1 * w[5],
        a0 * w[3] + nu * w[4] - s.s * w[5],
        -a1 * w[3] + s.s * w[4] - nu * w[5],
    };
}

}  // namespace

SolTangent propagate_sol_tangent(const SolState& x0, const SolTangent& w0, Intensity s, double t, double h) {
    require_step(h);
    if (!(t >= 0.0)) throw invalid_input("propagation time must be non-negative");
    TangentSystem z{x0.nu, x0.a0, x0.a1, w0[0], w0[1], w0[2], w0[3], w0[4], w0[5]};
    auto field = [s](const TangentSystem& v) { return tangent_field(v, s); };

    const auto full_steps = static_cast<long long>(std::floor(t / h * (1.0 + 1e-12)));
    const double remainder = t - static_cast<double>(full_steps) * h;
    for (long long i = 0; i < full_steps; ++i) z = detail::rk4_step(z, h, field);
    if (remainder > 1e-12 * h) z = detail::rk4_step(z, remainder, field);
    if (!detail::all_finite(z)) throw numerical_error("non-finite state");
    return {z[3], z[4], z[5], z[6], z[7], z[8]};
}

double lyapunov_on_anosov_set(Intensity s, double t_end, int branch, const LyapunovOptions& options) {
    require_step(options.h);
    if (branch != 1 && branch != -1) throw invalid_input("branch must be +1 or -1");
    if (!(t_end > 0.0) || !(options.renorm_interval > 0.0)) throw invalid_input("times must be positive");
    if (!(options.transient_fraction >= 0.0 && options.transient_fraction < 1.0))
        throw invalid_input("transient fraction must lie in [0, 1)");

    const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
    TangentSystem z{static_cast<double>(branch), 0.0, 0.0, inv_sqrt6, inv_sqrt6, inv_sqrt6,
                    inv_sqrt6, inv_sqrt6, inv_sqrt6};
    auto field = [s](const TangentSystem& v) { return tangent_field(v, s); };

    const auto steps_per_block =
        std::max<long long>(1, std::llround(options.renorm_interval / options.h));
    const double block = static_cast<double>(steps_per_block) * options.h;
    const auto blocks = std::max<long long>(1, std::llround(t_end / block));
    const auto skipped = static_cast<long long>(std::floor(options.transient_fraction * static_cast<double>(blocks)));

    double log_growth = 0.0;
    for (long long b = 0; b < blocks; ++b) {
        for (long long i = 0; i < steps_per_block; ++i) z = detail::rk4_step(z, options.h, field);
        if (!detail::all_finite(z)) throw numerical_error("non-finite state");
        double len = 0.0;
        for (std::size_t k = 3; k < 9; ++k) len += z[k] * z[k];
        len = std::sqrt(len);
        for (std::size_t k = 3; k < 9; ++k) z[k] /= len;
        if (b >= skipped) log_growth += std::log(len);
    }
    return log_growth / (static_cast<double>(blocks - skipped) * block);
}

}  // namespace solenoid
