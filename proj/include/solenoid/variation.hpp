#pragma once

// Magnetic flow on T*(Sol x R) for the left-invariant metric ds^2 + dt^2 and
// the twist du ^ dt, in left-trivialized coordinates
// (u, t, y0, y1; nu, tau, a0, a1), tau = p_t.
//
//   u' = nu,  t' = tau,  y0' = e^u a0,  y1' = e^-u a1,
//   nu' = a1^2 - a0^2 - s tau,  tau' = s nu,  a0' = nu a0,  a1' = -nu a1.
//
// For s != 0 the flow is completely integrable: a0 a1, a0 e^(-tau/s),
// tau - s u and H are first integrals.

#include <array>
#include <vector>

#include "solenoid/euler.hpp"

namespace solenoid {

struct VariationState {
    double u = 0.0;
    double t = 0.0;
    double y0 = 0.0;
    double y1 = 0.0;
    double nu = 0.0;
    double tau = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;

    std::array<double, 8> as_array() const { return {u, t, y0, y1, nu, tau, a0, a1}; }
    static VariationState from_array(const std::array<double, 8>& v) {
        return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]};
    }
};

VariationState variation_field(const VariationState& x, Intensity s);

struct VariationIntegrals {
    double hamiltonian = 0.0;   // (nu^2 + tau^2 + a0^2 + a1^2) / 2
    double product = 0.0;       // a0 a1
    double twisted_a0 = 0.0;    // a0 exp(-tau / s); zero for s = 0
    double tau_shift = 0.0;     // tau - s u
};

VariationIntegrals variation_integrals(const VariationState& x, Intensity s);

struct VariationSample {
    double t = 0.0;
    VariationState x;
};

struct VariationTrajectory {
    std::vector<VariationSample> samples;
    VariationState final_state;
    double hamiltonian_drift = 0.0;
    double product_drift = 0.0;
    double twisted_a0_drift = 0.0;
    double tau_shift_drift = 0.0;
};

VariationTrajectory variation_integrate(const VariationState& x0, Intensity s, double t_end, double h = kDefaultStep,
                                        bool keep_samples = false);

/// Left-frame tangent vector (du, dt, e^-u dy0, e^u dy1, dnu, dtau, da0, da1).
using VariationTangent = std::array<double, 8>;

VariationTangent propagate_variation_tangent(const VariationState& x0, const VariationTangent& w0, Intensity s,
                                             double t, double h = kDefaultStep);

struct VariationLyapunovOptions {
    double h = kDefaultStep;
    double renorm_interval = 1.0;
    double transient_fraction = 0.25;
};

/// Top Lyapunov exponent estimate along the orbit of x0.
double variation_lyapunov(const VariationState& x0, Intensity s, double t_end,
                          const VariationLyapunovOptions& options = {});

}  // namespace solenoid
