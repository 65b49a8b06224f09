#include "solenoid/averaging.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

#include "solenoid/error.hpp"

namespace solenoid {

namespace {

void validate(const PeriodOptions& o) {
    if (!(o.h > 0.0) || o.h > kMaxStep) throw invalid_input("step size must lie in (0, 0.1]");
    if (!(o.t_max > 0.0) || !std::isfinite(o.t_max)) throw invalid_input("t_max must be positive");
    if (!(o.return_tol > 0.0) || !(o.field_tol > 0.0) || !(o.time_tol > 0.0))
        throw invalid_input("tolerances must be positive");
    if (!(o.max_turn_per_step > 0.0)) throw invalid_input("max_turn_per_step must be positive");
}

}  // namespace

double effective_step(const PeriodOptions& options, Intensity s) {
    const double abs_s = std::abs(s.s);
    if (abs_s * options.h <= options.max_turn_per_step) return options.h;
    return options.max_turn_per_step / abs_s;
}

OrbitRecord detect_period(EulerPoint p0, Intensity s, const PeriodOptions& options) {
    validate(options);
    if (!is_finite(p0)) throw numerical_error("non-finite state");
    if (!on_sphere(p0)) throw invalid_input("state is not on the unit sphere");

    const EulerPoint e0 = euler_field(p0, s);
    const double speed0 = norm(e0);
    if (speed0 <= options.field_tol) throw domain_error("stationary orbit");
    const EulerPoint normal = (1.0 / speed0) * e0;
    auto section = [&](EulerPoint p) { return dot(p - p0, normal); };

    OrbitRecord rec;
    if (options.keep_samples) rec.samples.push_back({0.0, p0});
    const double f0 = casimir(p0, s);

    EulerPoint p = p0;
    double t = 0.0;
    double integral = 0.0;
    const double h = effective_step(options, s);

    while (t < options.t_max) {
        const double step = std::min(h, options.t_max - t);
        const AugmentedStep next = rk4_project_step_augmented(p, s, step);
        if (!is_finite(next.p)) throw numerical_error("non-finite state");

        const double g_prev = section(p);
        const double g_next = section(next.p);
        if (g_prev < 0.0 && g_next >= 0.0 &&
            norm(p - p0) <= 2.0 * step * norm(euler_field(p, s)) + options.return_tol) {
            double lo = 0.0;
            double hi = step;
            while (hi - lo > options.time_tol) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if (section(rk4_project_step_augmented(p, s, mid).p) < 0.0)
                    lo = mid;
                else
                    hi = mid;
            }
            const AugmentedStep cross = rk4_project_step_augmented(p, s, hi);
            if (norm(cross.p - p0) <= options.return_tol) {
                const double period = t + hi;
                rec.period = period;
                rec.nu_bar = (integral + cross.nu_integral) / period;
                rec.converged = true;
                rec.casimir_drift = std::max(rec.casimir_drift, std::abs(casimir(cross.p, s) - f0));
                if (options.keep_samples) rec.samples.push_back({period, cross.p});
                return rec;
            }
        }

        p = next.p;
        t += step;
        integral += next.nu_integral;
        rec.casimir_drift = std::max(rec.casimir_drift, std::abs(casimir(p, s) - f0));
        rec.hamiltonian_drift = std::max(rec.hamiltonian_drift, std::abs(hamiltonian(p) - 0.5));
        if (options.keep_samples) rec.samples.push_back({t, p});
    }

    rec.nu_bar = integral / t;
    rec.converged = false;
    return rec;
}

double nu_bar_at(EulerPoint p0, Intensity s, const PeriodOptions& options) {
    return detect_period(p0, s, options).nu_bar;
}

EulerPoint seed_on_level(Intensity s, double f) {
    if (!std::isfinite(f) || !std::isfinite(s.s)) throw invalid_input("empty level");
    if (std::abs(f) >= casimir_max(s)) throw invalid_input("empty level");
    if (f < 0.0) {
        const EulerPoint q = seed_on_level(s, -f);
        return {-q.nu, q.a0, -q.a1};
    }
    const double abs_s = std::abs(s.s);
    if (f < abs_s) {
        const double nu = f / s.s;
        return {nu, std::sqrt(std::max(0.0, 1.0 - nu * nu)), 0.0};
    }
    // Level f = s nu + (1 - nu^2)/2 on the longitude a0 = a1 > 0.
    const double nu = std::min(1.0, s.s + std::sqrt(std::max(0.0, s.s * s.s + 1.0 - 2.0 * f)));
    const double a = std::sqrt(std::max(0.0, 0.5 * (1.0 - nu * nu)));
    return project_to_sphere({nu, a, a});
}

std::vector<ProfilePoint> nubar_profile(Intensity s, std::span<const double> f_samples,
                                        const PeriodOptions& options, double f_margin) {
    if (s.s == 0.0) throw invalid_input("unmagnetized case excluded");
    const double fmax = casimir_max(s);
    std::vector<double> critical{fmax, -fmax};
    if (std::abs(s.s) < 1.0) {
        critical.push_back(s.s);
        critical.push_back(-s.s);
    }

    std::vector<double> sorted(f_samples.begin(), f_samples.end());
    std::sort(sorted.begin(), sorted.end());

    std::vector<ProfilePoint> out;
    out.reserve(sorted.size());
    for (double f : sorted) {
        if (!(std::abs(f) < fmax - f_margin)) throw invalid_input("empty level");
        for (double c : critical)
            if (std::abs(f - c) < f_margin) throw invalid_input("level too close to a critical value");
        const OrbitRecord rec = detect_period(seed_on_level(s, f), s, options);
        out.push_back({f, rec.nu_bar, rec.converged});
    }
    return out;
}

std::vector<double> simpson_weights(int n, double a, double b) {
    if (n < 3 || n % 2 == 0) throw invalid_input("Simpson's rule needs an odd node count >= 3");
    const double step = (b - a) / (n - 1);
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const double k = (j == 0 || j == n - 1) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        w[static_cast<std::size_t>(j)] = k * step / 3.0;
    }
    return w;
}

EntropyResult entropy(Intensity s, int n_nu, int n_xi, const EntropyOptions& options) {
    if (!std::isfinite(s.s)) throw invalid_input("intensity must be finite");
    if (s.s == 0.0) throw invalid_input("unmagnetized case excluded");
    if (n_xi < 4) throw invalid_input("n_xi must be at least 4");
    if (!(options.pole_guard > 0.0) || options.pole_guard >= 0.5) throw invalid_input("pole guard out of range");
    validate(options.period);

    const double lo = -1.0 + options.pole_guard;
    const double hi = 1.0 - options.pole_guard;
    const std::vector<double> weights = simpson_weights(n_nu, lo, hi);
    const double nu_step = (hi - lo) / (n_nu - 1);

    const auto rows = static_cast<std::size_t>(n_nu);
    const auto cols = static_cast<std::size_t>(n_xi);
    std::vector<double> values(rows * cols, 0.0);
    std::vector<char> fallback(rows * cols, 0);

    auto evaluate_row = [&](std::size_t j) {
        const double nu = lo + static_cast<double>(j) * nu_step;
        const double r = std::sqrt(1.0 - nu * nu);
        for (std::size_t i = 0; i < cols; ++i) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(cols);
            const EulerPoint p = project_to_sphere({nu, std::cos(angle) * r, std::sin(angle) * r});
            double nb = p.nu;  // a stationary node is its own orbit
            if (norm(euler_field(p, s)) > options.period.field_tol) {
                const OrbitRecord rec = detect_period(p, s, options.period);
                nb = rec.nu_bar;
                fallback[j * cols + i] = rec.converged ? 0 : 1;
            }
            values[j * cols + i] = std::abs(nb);
        }
    };

    const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(rows)));
    if (threads == 1) {
        for (std::size_t j = 0; j < rows; ++j) evaluate_row(j);
    } else {
        std::atomic<std::size_t> next_row{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t j = next_row++; j < rows; j = next_row++) {
                    try {
                        evaluate_row(j);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    double total = 0.0;
    std::size_t fallbacks = 0;
    for (std::size_t j = 0; j < rows; ++j) {
        double row = 0.0;
        for (std::size_t i = 0; i < cols; ++i) {
            row += values[j * cols + i];
            fallbacks += static_cast<std::size_t>(fallback[j * cols + i]);
        }
        total += weights[j] * (row / static_cast<double>(cols));
    }

    EntropyResult result;
    result.s = s;
    result.value = 0.5 * total;
    result.n_nu = n_nu;
    result.n_xi = n_xi;
    result.fallback_fraction = static_cast<double>(fallbacks) / static_cast<double>(rows * cols);
    return result;
}

std::vector<EntropyResult> entropy_curve(std::span<const double> s_values, int n_nu, int n_xi,
                                         const EntropyOptions& options) {
    for (double s : s_values)
        if (s == 0.0) throw invalid_input("unmagnetized case excluded");
    std::vector<EntropyResult> out;
    out.reserve(s_values.size());
    for (double s : s_values) out.push_back(entropy(Intensity{s}, n_nu, n_xi, options));
    return out;
}

}  // namespace solenoid
