#pragma once

// Orbit averages of nu over closed Euler orbits and the Liouville entropy
// integral  h = \int_S |nu_bar| dtheta.

#include <span>
#include <vector>

#include "solenoid/euler.hpp"

namespace solenoid {

struct PeriodOptions {
    double h = kDefaultStep;
    double t_max = 200.0;
    double return_tol = 1e-8;   // Euclidean distance of the return point to the seed
    double field_tol = 1e-8;    // seeds with |E| below this are stationary
    double time_tol = 1e-12;    // bisection width for the crossing time
    // Upper bound on |s| * step: the orbit turns by roughly |s| h per step,
    // so strong fields get a proportionally smaller (still fixed) step.
    double max_turn_per_step = 0.02;
    bool keep_samples = false;
};

/// The fixed step actually used for intensity s: min(h, max_turn_per_step / |s|).
double effective_step(const PeriodOptions& options, Intensity s);

/// Integrates from p0 and watches the signed distance to the hyperplane
/// through p0 normal to the flow direction there. The first upward crossing
/// that lands within return_tol of p0 fixes the period (crossing time refined
/// by bisection); nu_bar is then the exact RK4 quadrature of nu over one
/// period divided by it. Without a return before t_max the Birkhoff average
/// over [0, t_max] is reported and converged is false.
///
/// Throws Error(domain, "stationary orbit") when p0 is a critical point.
OrbitRecord detect_period(EulerPoint p0, Intensity s, const PeriodOptions& options = {});

double nu_bar_at(EulerPoint p0, Intensity s, const PeriodOptions& options = {});

/// A point on the level {f = c} of the Casimir on the sphere. Levels with
/// |c| < |s| are seeded on the longitude {a1 = 0, a0 > 0}; the remaining
/// positive levels on {a0 = a1 > 0}; negative levels are the mirror image
/// (nu, a0, a1) -> (-nu, a0, -a1) of the seed for -c, which maps level c
/// onto level -c and reverses time.
///
/// Throws Error(invalid_input, "empty level") when |c| >= max f.
EulerPoint seed_on_level(Intensity s, double f);

struct ProfilePoint {
    double f = 0.0;
    double nu_bar = 0.0;
    bool converged = false;
};

/// nu_bar as a function of the level f. Every sample must lie strictly inside
/// (min f, max f) and at least f_margin away from every critical value.
std::vector<ProfilePoint> nubar_profile(Intensity s, std::span<const double> f_samples,
                                        const PeriodOptions& options = {}, double f_margin = 1e-6);

struct EntropyOptions {
    PeriodOptions period;
    double pole_guard = 1e-4;
    unsigned threads = 1;
};

struct EntropyResult {
    Intensity s;
    double value = 0.0;
    int n_nu = 0;
    int n_xi = 0;
    double fallback_fraction = 0.0;
};

/// Composite Simpson weights for n (odd, >= 3) equally spaced nodes on [a, b].
std::vector<double> simpson_weights(int n, double a, double b);

/// Evaluates \int_S |nu_bar| dtheta in the area coordinates (xi, nu), where
/// theta = (1/2) dxi ^ dnu. Simpson's rule in nu over [-1 + eps, 1 - eps],
/// periodic trapezoid in xi over [0, 1). The node (xi, nu) is the sphere
/// point (nu, cos(2 pi xi) r, sin(2 pi xi) r), r = sqrt(1 - nu^2).
///
/// Rows are evaluated in parallel but summed in a fixed order, so the value
/// does not depend on the thread count.
EntropyResult entropy(Intensity s, int n_nu, int n_xi, const EntropyOptions& options = {});

std::vector<EntropyResult> entropy_curve(std::span<const double> s_values, int n_nu, int n_xi,
                                         const EntropyOptions& options = {});

}  // namespace solenoid
