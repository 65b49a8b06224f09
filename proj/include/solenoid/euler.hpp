#pragma once

// Reduced (Euler) dynamics of the magnetic flow on T*Sol.
//
// A point of the dual Lie algebra has coordinates (nu, a0, a1); nu is the
// momentum conjugate to u and a0, a1 are the left-invariant momenta along
// the two R^2 directions. The magnetic intensity s enters only through the
// twisted bracket {a0, a1} = s.

#include <optional>
#include <string_view>
#include <vector>

namespace solenoid {

inline constexpr double kSphereTol = 1e-12;
inline constexpr double kDefaultStep = 1e-3;
inline constexpr double kMaxStep = 1e-1;

struct EulerPoint {
    double nu = 0.0;
    double a0 = 0.0;
    double a1 = 0.0;

    friend constexpr EulerPoint operator+(EulerPoint a, EulerPoint b) {
        return {a.nu + b.nu, a.a0 + b.a0, a.a1 + b.a1};
    }
    friend constexpr EulerPoint operator-(EulerPoint a, EulerPoint b) {
        return {a.nu - b.nu, a.a0 - b.a0, a.a1 - b.a1};
    }
    friend constexpr EulerPoint operator*(double k, EulerPoint a) {
        return {k * a.nu, k * a.a0, k * a.a1};
    }
    friend constexpr bool operator==(const EulerPoint&, const EulerPoint&) = default;
};

/// Magnetic intensity s. Any finite real; s = 0 is the geodesic flow.
struct Intensity {
    double s = 0.0;
};

double dot(EulerPoint a, EulerPoint b);
double norm(EulerPoint p);
bool is_finite(EulerPoint p);

/// |nu^2 + a0^2 + a1^2 - 1| <= tol.
bool on_sphere(EulerPoint p, double tol = kSphereTol);

/// Radial projection onto the unit sphere. Throws on the origin.
EulerPoint project_to_sphere(EulerPoint p);

/// The Casimir f = s nu + a0 a1.
double casimir(EulerPoint p, Intensity s);

/// H = (nu^2 + a0^2 + a1^2) / 2.
double hamiltonian(EulerPoint p);

/// Right-hand side of the Euler equations:
///   nu' = a1^2 - a0^2,  a0' = nu a0 - s a1,  a1' = s a0 - nu a1.
EulerPoint euler_field(EulerPoint p, Intensity s);

/// Gradient of the Casimir in ambient coordinates.
EulerPoint casimir_gradient(EulerPoint p, Intensity s);

/// One classical RK4 step followed by radial projection onto the sphere.
/// Requires an on-sphere, finite p and 0 < h <= kMaxStep.
EulerPoint rk4_project_step(EulerPoint p, Intensity s, double h);

/// Result of one step that also integrates the running integral of nu
/// with the same stage values (the u-increment of the lifted flow).
struct AugmentedStep {
    EulerPoint p;
    double nu_integral = 0.0;
};

/// Unchecked RK4 + projection step carrying the integral of nu. Used by
/// the period detector for sub-steps of arbitrary length.
AugmentedStep rk4_project_step_augmented(EulerPoint p, Intensity s, double h);

struct OrbitSample {
    double t = 0.0;
    EulerPoint p;
};

/// An integrated Euler trajectory. Samples are optional for long runs;
/// period, nu_bar and converged are filled by the period detector.
struct OrbitRecord {
    std::vector<OrbitSample> samples;
    std::optional<double> period;
    double nu_bar = 0.0;
    double casimir_drift = 0.0;
    double hamiltonian_drift = 0.0;
    bool converged = false;
};

/// Fixed-step integration over [0, t_end], sampling every step. The final
/// step is shortened so the last sample sits exactly at t_end. nu_bar holds
/// the time average over the run; period stays unset.
OrbitRecord integrate_orbit(EulerPoint p0, Intensity s, double t_end, double h = kDefaultStep);

enum class CriticalKind { elliptic_peak, elliptic_pit, hyperbolic, degenerate };

std::string_view to_string(CriticalKind kind);

struct CriticalPoint {
    EulerPoint point;
    CriticalKind kind;
    double f = 0.0;
};

struct CriticalPointReport {
    std::vector<CriticalPoint> points;
};

/// Critical points of the Casimir restricted to the unit sphere, which are
/// exactly the zeros of the Euler field there. Rejects s = 0.
CriticalPointReport classify_critical_points(Intensity s);

/// Largest and smallest value of the Casimir on the unit sphere.
double casimir_max(Intensity s);
double casimir_min(Intensity s);

/// Quadratic form [a0 a1] [[s, nu], [nu, s]] [a0 a1]^T. The matrix is
/// positive definite when s > |nu|, so for s > 1 the form vanishes on the
/// sphere only at the poles (+-1, 0, 0).
double gradient_pairing(EulerPoint p, Intensity s);

/// d nu / d tau along the Euclidean gradient flow of f restricted to the
/// sphere: s (1 - nu^2) - 2 nu a0 a1 at on-sphere points. Shares the sign
/// of gradient_pairing whenever |s| > 1.
double nu_rate_along_gradient(EulerPoint p, Intensity s);

/// Tangential (on-sphere) gradient of the Casimir.
EulerPoint casimir_sphere_gradient(EulerPoint p, Intensity s);

}  // namespace solenoid
