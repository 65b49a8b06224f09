#include "solenoid/euler.hpp"

#include <cmath>

#include "solenoid/error.hpp"

namespace solenoid {

double dot(EulerPoint a, EulerPoint b) { return a.nu * b.nu + a.a0 * b.a0 + a.a1 * b.a1; }

double norm(EulerPoint p) { return std::sqrt(dot(p, p)); }

bool is_finite(EulerPoint p) {
    return std::isfinite(p.nu) && std::isfinite(p.a0) && std::isfinite(p.a1);
}

bool on_sphere(EulerPoint p, double tol) { return std::abs(dot(p, p) - 1.0) <= tol; }

EulerPoint project_to_sphere(EulerPoint p) {
    const double r = norm(p);
    if (!(r > 0.0) || !std::isfinite(r)) throw invalid_input("cannot project state onto the unit sphere");
    return (1.0 / r) * p;
}

double casimir(EulerPoint p, Intensity s) { return s.s * p.nu + p.a0 * p.a1; }

double hamiltonian(EulerPoint p) { return 0.5 * dot(p, p); }

EulerPoint euler_field(EulerPoint p, Intensity s) {
    return {
        -p.a0 * p.a0 + p.a1 * p.a1,
        -p.a1 * s.s + p.nu * p.a0,
        p.a0 * s.s - p.nu * p.a1,
    };
}

EulerPoint casimir_gradient(EulerPoint p, Intensity s) { return {s.s, p.a1, p.a0}; }

AugmentedStep rk4_project_step_augmented(EulerPoint p, Intensity s, double h) {
    const EulerPoint k1 = euler_field(p, s);
    const EulerPoint p2 = p + (0.5 * h) * k1;
    const EulerPoint k2 = euler_field(p2, s);
    const EulerPoint p3 = p + (0.5 * h) * k2;
    const EulerPoint k3 = euler_field(p3, s);
    const EulerPoint p4 = p + h * k3;
    const EulerPoint k4 = euler_field(p4, s);

    const EulerPoint next = p + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    const double r = norm(next);
    AugmentedStep out;
    out.p = (1.0 / r) * next;
    out.nu_integral = (h / 6.0) * (p.nu + 2.0 * p2.nu + 2.0 * p3.nu + p4.nu);
    return out;
}

namespace {

void require_step(double h) {
    if (!(h > 0.0) || h > kMaxStep) throw invalid_input("step size must lie in (0, 0.1]");
}

void require_state(EulerPoint p) {
    if (!is_finite(p)) throw numerical_error("non-finite state");
    if (!on_sphere(p)) throw invalid_input("state is not on the unit sphere");
}

}  // namespace

EulerPoint rk4_project_step(EulerPoint p, Intensity s, double h) {
    require_step(h);
    require_state(p);
    if (!std::isfinite(s.s)) throw invalid_input("intensity must be finite");
    const EulerPoint next = rk4_project_step_augmented(p, s, h).p;
    if (!is_finite(next)) throw numerical_error("non-finite state");
    return next;
}

OrbitRecord integrate_orbit(EulerPoint p0, Intensity s, double t_end, double h) {
    require_step(h);
    require_state(p0);
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw invalid_input("t_end must be positive");

    const auto full_steps = static_cast<long long>(std::floor(t_end / h * (1.0 + 1e-12)));
    const double remainder = t_end - static_cast<double>(full_steps) * h;

    OrbitRecord rec;
    rec.samples.reserve(static_cast<std::size_t>(full_steps) + 2);
    rec.samples.push_back({0.0, p0});

    const double f0 = casimir(p0, s);
    EulerPoint p = p0;
    double integral = 0.0;
    auto advance = [&](double step, double t) {
        const AugmentedStep next = rk4_project_step_augmented(p, s, step);
        if (!is_finite(next.p)) throw numerical_error("non-finite state");
        p = next.p;
        integral += next.nu_integral;
        rec.samples.push_back({t, p});
        rec.casimir_drift = std::max(rec.casimir_drift, std::abs(casimir(p, s) - f0));
        rec.hamiltonian_drift = std::max(rec.hamiltonian_drift, std::abs(hamiltonian(p) - 0.5));
    };
    for (long long i = 1; i <= full_steps; ++i) advance(h, static_cast<double>(i) * h);
    if (remainder > 1e-12 * h) advance(remainder, t_end);

    rec.nu_bar = integral / t_end;
    rec.converged = false;
    return rec;
}

std::string_view to_string(CriticalKind kind) {
    switch (kind) {
        case CriticalKind::elliptic_peak: return "elliptic-peak";
        case CriticalKind::elliptic_pit: return "elliptic-pit";
        case CriticalKind::hyperbolic: return "hyperbolic";
        case CriticalKind::degenerate: return "degenerate";
    }
    return "unknown";
}

CriticalPointReport classify_critical_points(Intensity s) {
    if (!std::isfinite(s.s)) throw invalid_input("intensity must be finite");
    if (s.s == 0.0) throw invalid_input("unmagnetized case excluded");

    CriticalPointReport report;
    auto add = [&](EulerPoint p, CriticalKind kind) { report.points.push_back({p, kind, casimir(p, s)}); };
    const double abs_s = std::abs(s.s);
    const EulerPoint north{1.0, 0.0, 0.0};
    const EulerPoint south{-1.0, 0.0, 0.0};

    if (abs_s < 1.0) {
        const double a = std::sqrt(0.5 * (1.0 - s.s * s.s));
        add({s.s, a, a}, CriticalKind::elliptic_peak);
        add({s.s, -a, -a}, CriticalKind::elliptic_peak);
        add({-s.s, a, -a}, CriticalKind::elliptic_pit);
        add({-s.s, -a, a}, CriticalKind::elliptic_pit);
        add(north, CriticalKind::hyperbolic);
        add(south, CriticalKind::hyperbolic);
    } else if (abs_s > 1.0) {
        // The pole with f = |s| is the peak.
        add(north, s.s > 0.0 ? CriticalKind::elliptic_peak : CriticalKind::elliptic_pit);
        add(south, s.s > 0.0 ? CriticalKind::elliptic_pit : CriticalKind::elliptic_peak);
    } else {
        add(north, CriticalKind::degenerate);
        add(south, CriticalKind::degenerate);
    }
    return report;
}

double casimir_max(Intensity s) {
    const double abs_s = std::abs(s.s);
    return abs_s >= 1.0 ? abs_s : 0.5 * (1.0 + s.s * s.s);
}

double casimir_min(Intensity s) { return -casimir_max(s); }

double gradient_pairing(EulerPoint p, Intensity s) {
    return s.s * p.a0 * p.a0 + 2.0 * p.nu * p.a0 * p.a1 + s.s * p.a1 * p.a1;
}

EulerPoint casimir_sphere_gradient(EulerPoint p, Intensity s) {
    const EulerPoint g = casimir_gradient(p, s);
    return g - (dot(g, p) / dot(p, p)) * p;
}

double nu_rate_along_gradient(EulerPoint p, Intensity s) { return casimir_sphere_gradient(p, s).nu; }

}  // namespace solenoid
