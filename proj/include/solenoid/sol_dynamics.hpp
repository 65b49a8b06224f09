#pragma once

// The unreduced magnetic flow on T*Sol in the left trivialization
// (u, y0, y1; nu, a0, a1), its first integrals, closed-orbit reconstruction
// and the Lyapunov exponent on the invariant Anosov set.

#include <array>
#include <vector>

#include "solenoid/averaging.hpp"
#include "solenoid/euler.hpp"

namespace solenoid {

struct SolState {
    double u = 0.0;
    double y0 = 0.0;
    double y1 = 0.0;
    double nu = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;

    EulerPoint momentum() const { return {nu, a0, a1}; }
    std::array<double, 6> as_array() const { return {u, y0, y1, nu, a0, a1}; }
    static SolState from_array(const std::array<double, 6>& v) { return {v[0], v[1], v[2], v[3], v[4], v[5]}; }
};

/// u' = nu, y0' = e^u a0, y1' = e^-u a1 together with the Euler equations.
SolState sol_field(const SolState& x, Intensity s);

/// Conserved quantities of the full flow.
struct SolIntegrals {
    double hamiltonian = 0.0;
    double p_y0_integral = 0.0;  // e^-u a0 + s y1
    double p_y1_integral = 0.0;  // e^u a1 - s y0
};

SolIntegrals sol_integrals(const SolState& x, Intensity s);

struct SolSample {
    double t = 0.0;
    SolState x;
};

struct SolTrajectory {
    std::vector<SolSample> samples;  // empty unless requested
    SolState final_state;
    double hamiltonian_drift = 0.0;
    double p_y0_drift = 0.0;
    double p_y1_drift = 0.0;
};

/// Plain RK4 (no projection) over [0, t_end]; the last step is shortened to
/// land exactly on t_end. Drifts are maxima over all steps.
SolTrajectory sol_integrate(const SolState& x0, Intensity s, double t_end, double h = kDefaultStep,
                            bool keep_samples = false);

struct ClosedOrbit {
    SolState start;
    SolState end;
    double period = 0.0;
    double closure_error = 0.0;  // Euclidean distance |end - start| in R^6
};

/// Seeds the Euler orbit on the zero level of f (where nu_bar = 0), detects
/// its period T, lifts it to u = y0 = y1 = 0 and integrates the full flow for
/// time T. For s != 0 the endpoint returns to the start: a contractible
/// closed orbit. Rejects s = 0, where no such orbit exists.
ClosedOrbit reconstruct_closed_orbit(Intensity s, const PeriodOptions& options = {});

struct LyapunovOptions {
    double h = kDefaultStep;
    double renorm_interval = 1.0;
    // Leading share of the run whose growth is discarded while the tangent
    // vector aligns with the dominant direction.
    double transient_fraction = 0.25;
};

/// Tangent vector in the left-invariant frame
/// (du, e^-u dy0, e^u dy1, dnu, da0, da1); its Euclidean norm is the norm of
/// the left-invariant metric plus the flat momentum norm.
using SolTangent = std::array<double, 6>;

/// Propagates a left-frame tangent vector along the orbit of x0 for time t.
SolTangent propagate_sol_tangent(const SolState& x0, const SolTangent& w0, Intensity s, double t,
                                 double h = kDefaultStep);

/// Top Lyapunov exponent along the orbit nu = branch (+1 or -1),
/// a0 = a1 = 0, by tangent propagation with periodic renormalization.
double lyapunov_on_anosov_set(Intensity s, double t_end, int branch = 1, const LyapunovOptions& options = {});

}  // namespace solenoid
