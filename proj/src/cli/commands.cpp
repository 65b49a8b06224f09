#include "solenoid/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "solenoid/cli/csv.hpp"
#include "solenoid/error.hpp"
#include "solenoid/lie/builtin.hpp"
#include "solenoid/lie/parse.hpp"
#include "solenoid/sol_dynamics.hpp"
#include "solenoid/variation.hpp"

namespace solenoid::cli {

namespace {

std::string default_path(const RunConfig& config, const std::string& given, const std::string& name) {
    if (!given.empty()) return given;
    return (std::filesystem::path(config.out_dir) / name).string();
}

// Splits on whitespace, ',' and ';'.
std::vector<std::string> tokens(const std::string& text) {
    std::string cleaned = text;
    std::replace_if(cleaned.begin(), cleaned.end(), [](char ch) { return ch == ',' || ch == ';'; }, ' ');
    std::istringstream in(cleaned);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

double parse_real(const std::string& token) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(token, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != token.size() || !std::isfinite(v)) throw invalid_input("not a finite number: '" + token + "'");
    return v;
}

}  // namespace

std::vector<double> parse_reals(const std::string& text) {
    std::vector<double> out;
    for (const auto& t : tokens(text)) out.push_back(parse_real(t));
    return out;
}

std::vector<double> parse_s_list(const std::string& text) {
    std::vector<double> values = parse_reals(text);
    if (values.empty()) throw invalid_input("empty s list");
    for (double s : values)
        if (s == 0.0) throw invalid_input("unmagnetized case excluded");
    return values;
}

std::vector<double> parse_s_range(const std::string& text) {
    std::string spaced = text;
    std::replace(spaced.begin(), spaced.end(), ':', ' ');
    const std::vector<double> v = parse_reals(spaced);
    if (v.size() != 3) throw invalid_input("s range must be lo:hi:step");
    const double lo = v[0], hi = v[1], step = v[2];
    if (!(step > 0.0) || hi < lo) throw invalid_input("s range needs lo <= hi and step > 0");
    const double eps = 1e-9 * step;
    std::vector<double> out;
    for (long k = 0;; ++k) {
        const double s = lo + static_cast<double>(k) * step;
        if (s > hi + eps) break;
        if (std::abs(s) > eps) out.push_back(s);
        if (out.size() > 100000) throw invalid_input("s range too long");
    }
    if (out.empty()) throw invalid_input("s range contains no admissible value");
    return out;
}

std::string cmd_nubar(const RunConfig& config, const NubarArgs& args, std::ostream& log) {
    validate(config);
    if (!std::isfinite(args.s) || args.s == 0.0) throw invalid_input("unmagnetized case excluded");
    if (args.samples < 2) throw invalid_input("need at least 2 samples");
    const Intensity s{args.s};
    const double fmax = casimir_max(s);
    const double f_lo = args.f_min.value_or(-fmax + 1e-4);
    const double f_hi = args.f_max.value_or(fmax - 1e-4);
    if (!(f_lo < f_hi) || f_lo <= -fmax || f_hi >= fmax)
        throw invalid_input("f range must satisfy " + format_real(-fmax) + " < f-min < f-max < " + format_real(fmax));

    std::vector<double> levels;
    for (int k = 0; k < args.samples; ++k)
        levels.push_back(f_lo + (f_hi - f_lo) * static_cast<double>(k) / static_cast<double>(args.samples - 1));
    const std::vector<ProfilePoint> profile = nubar_profile(s, levels, period_options(config));

    const std::string path = default_path(config, args.out, "nubar_s" + format_real(args.s) + ".csv");
    {
        CsvWriter csv(path, {"f", "nu_bar", "converged"});
        for (const auto& p : profile) csv.row({format_real(p.f), format_real(p.nu_bar), p.converged ? "1" : "0"});
    }
    write_gnuplot_script(path, "nu_bar against f, s = " + format_real(args.s), "f", "nu_bar", {{1, 2, "nu_bar"}});
    const auto fallbacks = std::count_if(profile.begin(), profile.end(), [](const auto& p) { return !p.converged; });
    log << "wrote " << path << " (" << profile.size() << " levels, " << fallbacks << " Birkhoff fallbacks)\n";
    return path;
}

std::string cmd_entropy(const RunConfig& config, const EntropyArgs& args, std::ostream& log) {
    validate(config);
    if (args.s_values.empty()) throw invalid_input("give --s-list or --s-range");
    for (double s : args.s_values)
        if (s == 0.0 || !std::isfinite(s)) throw invalid_input("unmagnetized case excluded");

    const std::string path = default_path(config, args.out, "entropy.csv");
    CsvWriter csv(path, {"s", "h_mu", "fallback_fraction"});
    const EntropyOptions options = entropy_options(config);
    for (double s : args.s_values) {
        const EntropyResult r = entropy(Intensity{s}, config.n_nu, config.n_xi, options);
        csv.row({s, r.value, r.fallback_fraction});
        log << "s = " << format_real(s) << ": h_mu = " << format_real(r.value)
            << " (fallback " << format_real(r.fallback_fraction) << ")\n";
    }
    write_gnuplot_script(path, "Liouville entropy against s", "s", "h_mu", {{1, 2, "h_mu"}});
    log << "wrote " << path << '\n';
    return path;
}

std::string cmd_orbit(const RunConfig& config, const OrbitArgs& args, std::ostream& log) {
    validate(config);
    if (!(args.t_end > 0.0)) throw invalid_input("t-end must be positive");
    if (args.stride < 1) throw invalid_input("stride must be positive");
    if (!std::isfinite(args.s)) throw invalid_input("s must be finite");
    const Intensity s{args.s};
    const std::string path = default_path(config, args.out, "orbit_" + args.mode + ".csv");
    auto keep = [&](std::size_t i, std::size_t last) { return i % static_cast<std::size_t>(args.stride) == 0 || i == last; };

    if (args.mode == "euler") {
        if (args.seed.size() != 3) throw invalid_input("euler seed needs 3 reals: nu a0 a1");
        const EulerPoint raw{args.seed[0], args.seed[1], args.seed[2]};
        if (!is_finite(raw) || norm(raw) == 0.0) throw invalid_input("euler seed must be finite and nonzero");
        const EulerPoint p0 = project_to_sphere(raw);
        if (norm(p0 - raw) > kSphereTol) log << "note: seed projected onto the unit sphere\n";
        const OrbitRecord rec = integrate_orbit(p0, s, args.t_end, config.h);
        CsvWriter csv(path, {"time", "nu", "a0", "a1", "f", "H"});
        for (std::size_t i = 0; i < rec.samples.size(); ++i) {
            if (!keep(i, rec.samples.size() - 1)) continue;
            const auto& q = rec.samples[i];
            csv.row({q.t, q.p.nu, q.p.a0, q.p.a1, casimir(q.p, s), hamiltonian(q.p)});
        }
        write_gnuplot_script(path, "Euler orbit", "time", "", {{1, 2, "nu"}, {1, 3, "a0"}, {1, 4, "a1"}});
        log << "casimir drift " << format_real(rec.casimir_drift) << ", H drift "
            << format_real(rec.hamiltonian_drift) << '\n';
    } else if (args.mode == "sol") {
        if (args.seed.size() != 6) throw invalid_input("sol seed needs 6 reals: u y0 y1 nu a0 a1");
        const SolState x0 = SolState::from_array({args.seed[0], args.seed[1], args.seed[2], args.seed[3],
                                                  args.seed[4], args.seed[5]});
        const SolTrajectory traj = sol_integrate(x0, s, args.t_end, config.h, true);
        CsvWriter csv(path, {"time", "u", "y0", "y1", "nu", "a0", "a1", "H", "p_y0_integral", "p_y1_integral"});
        for (std::size_t i = 0; i < traj.samples.size(); ++i) {
            if (!keep(i, traj.samples.size() - 1)) continue;
            const auto& [t, x] = traj.samples[i];
            const SolIntegrals I = sol_integrals(x, s);
            csv.row({t, x.u, x.y0, x.y1, x.nu, x.a0, x.a1, I.hamiltonian, I.p_y0_integral, I.p_y1_integral});
        }
        write_gnuplot_script(path, "Sol orbit", "time", "", {{1, 2, "u"}, {1, 3, "y0"}, {1, 4, "y1"}});
        log << "drifts: H " << format_real(traj.hamiltonian_drift) << ", p_y0 + s y1 " << format_real(traj.p_y0_drift)
            << ", p_y1 - s y0 " << format_real(traj.p_y1_drift) << '\n';
    } else if (args.mode == "variation") {
        if (args.seed.size() != 8) throw invalid_input("variation seed needs 8 reals: u t y0 y1 nu tau a0 a1");
        std::array<double, 8> v{};
        std::copy(args.seed.begin(), args.seed.end(), v.begin());
        const VariationTrajectory traj = variation_integrate(VariationState::from_array(v), s, args.t_end, config.h, true);
        CsvWriter csv(path, {"time", "u", "t", "y0", "y1", "nu", "tau", "a0", "a1", "H", "a0_a1", "a0_exp_minus_tau_over_s",
                             "tau_minus_s_u"});
        for (std::size_t i = 0; i < traj.samples.size(); ++i) {
            if (!keep(i, traj.samples.size() - 1)) continue;
            const auto& [t, x] = traj.samples[i];
            const VariationIntegrals I = variation_integrals(x, s);
            csv.row({t, x.u, x.t, x.y0, x.y1, x.nu, x.tau, x.a0, x.a1, I.hamiltonian, I.product, I.twisted_a0,
                     I.tau_shift});
        }
        write_gnuplot_script(path, "Sol x R orbit", "time", "", {{1, 2, "u"}, {1, 3, "t"}});
        log << "drifts: H " << format_real(traj.hamiltonian_drift) << ", a0 a1 " << format_real(traj.product_drift)
            << ", a0 exp(-tau/s) " << format_real(traj.twisted_a0_drift) << ", tau - s u "
            << format_real(traj.tau_shift_drift) << '\n';
    } else {
        throw invalid_input("mode must be euler, sol or variation");
    }
    log << "wrote " << path << '\n';
    return path;
}

IntMatrix2 parse_matrix(const std::string& text) {
    const auto t = tokens(text);
    if (t.size() != 4) throw invalid_input("matrix must be given as a,b,c,d");
    IntMatrix2 A{};
    for (std::size_t k = 0; k < 4; ++k) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(t[k], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != t[k].size()) throw invalid_input("matrix entries must be integers: '" + t[k] + "'");
        A[k / 2][k % 2] = v;
    }
    return A;
}

void cmd_lattice(const IntMatrix2& A, std::ostream& out) {
    const LatticeSpec L = lattice_from_matrix(A);
    auto r = [](double v) { return format_real(v); };
    out << "A = [[" << A[0][0] << ", " << A[0][1] << "], [" << A[1][0] << ", " << A[1][1] << "]]\n"
        << "lambda = " << r(L.lambda) << '\n'
        << "P = [[" << r(L.P[0][0]) << ", " << r(L.P[0][1]) << "], [" << r(L.P[1][0]) << ", " << r(L.P[1][1]) << "]]\n"
        << "P A P^-1 = diag(" << r(L.eigenvalues[0]) << ", " << r(L.eigenvalues[1]) << ")\n"
        << "diagonal residual = " << r(L.diagonal_residual) << '\n'
        << "volume = " << r(L.volume) << '\n';
}

// ---------------------------------------------------------------------------
// Lie algebra commands

namespace {

std::string combination(const lie::RVector& v, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (sgn(v[i]) == 0) continue;
        lie::Rational mag = abs(v[i]);
        if (out.empty())
            out += sgn(v[i]) < 0 ? "-" : "";
        else
            out += sgn(v[i]) < 0 ? " - " : " + ";
        if (mag != 1) out += mag.get_str() + " ";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> pair_names(const std::vector<std::string>& names) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) out.push_back(names[i] + "^" + names[j]);
    return out;
}

bool is_builtin(const std::string& name) {
    const auto names = lie::builtin_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

lie::Rational parse_rational(const std::string& token) {
    lie::Rational q;
    const std::string body = !token.empty() && token[0] == '+' ? token.substr(1) : token;
    if (body.empty() || body.find_first_not_of("-0123456789/") != std::string::npos || q.set_str(body, 10) != 0 ||
        sgn(q.get_den()) == 0)
        throw invalid_input("not a rational number: '" + token + "'");
    q.canonicalize();
    return q;
}

std::vector<lie::TwoVector> generators_for(const LieArgs& args, std::size_t dim) {
    if (!args.generators.empty()) return load_generators(dim, args.generators);
    if (is_builtin(args.algebra)) return lie::builtin_kernel_generators(args.algebra, args.n);
    return {};
}

}  // namespace

lie::LieAlgebraSpec load_algebra(const LieArgs& args, std::ostream& warn) {
    if (args.algebra.empty()) throw invalid_input("--algebra is required");
    const bool builtin = is_builtin(args.algebra);
    if (!builtin && !std::filesystem::exists(args.algebra)) {
        std::string known;
        for (const auto& n : lie::builtin_names()) known += " " + n;
        throw invalid_input("'" + args.algebra + "' is neither a built-in algebra (" + known.substr(1) +
                            ") nor a readable file");
    }
    lie::LieAlgebraSpec alg =
        builtin ? lie::builtin_algebra(args.algebra, args.n) : lie::load_structure_constants(args.algebra);
    if (!lie::is_solvable(alg))
        warn << "warning: the algebra is not solvable; the displacement argument assumes a completely "
                "solvable algebra\n";
    return alg;
}

lie::TwoForm parse_omega(std::size_t dim, const std::string& text) {
    const auto t = tokens(text);
    if (t.empty() || t.size() % 3 != 0) throw invalid_input("omega must be triples 'i j value' (1-based)");
    lie::TwoForm omega(dim);
    for (std::size_t k = 0; k < t.size(); k += 3) {
        const double i = parse_real(t[k]);
        const double j = parse_real(t[k + 1]);
        if (i != std::floor(i) || j != std::floor(j) || i < 1 || j < 1 || i > static_cast<double>(dim) ||
            j > static_cast<double>(dim) || i == j)
            throw invalid_input("omega indices must be distinct integers in 1.." + std::to_string(dim));
        omega.set(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1, parse_rational(t[k + 2]));
    }
    return omega;
}

std::vector<lie::TwoVector> load_generators(std::size_t dim, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open '" + path + "'");
    std::vector<lie::TwoVector> out;
    std::string line;
    for (int number = 1; std::getline(in, line); ++number) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto bar = line.find('|');
        const std::string where = path + ":" + std::to_string(number);
        if (bar == std::string::npos) throw invalid_input(where + ": expected 'x coords | y coords'");
        auto vec = [&](const std::string& part) {
            lie::RVector v;
            for (const auto& tok : tokens(part)) v.push_back(parse_rational(tok));
            if (v.size() != dim) throw invalid_input(where + ": expected " + std::to_string(dim) + " coordinates");
            return v;
        };
        out.push_back(lie::wedge(vec(line.substr(0, bar)), vec(line.substr(bar + 1))));
    }
    return out;
}

void cmd_lie_b2(const LieArgs& args, std::ostream& out, std::ostream& warn) {
    out << lie::ce_b2(load_algebra(args, warn)) << '\n';
}

void cmd_lie_kernel(const LieArgs& args, std::ostream& out, std::ostream& warn) {
    const lie::LieAlgebraSpec alg = load_algebra(args, warn);
    const auto kernel = lie::kernel_L(alg);
    const auto names = pair_names(alg.basis_names());
    out << "rank L = " << lie::rank(lie::bracket_map(alg)) << '\n' << "dim Ker L = " << kernel.size() << '\n';
    for (const auto& v : kernel) out << combination(v.coords, names) << '\n';
}

bool cmd_lie_check_generators(const LieArgs& args, std::ostream& out, std::ostream& warn) {
    const lie::LieAlgebraSpec alg = load_algebra(args, warn);
    const auto candidates = generators_for(args, alg.dim());
    if (candidates.empty()) throw invalid_input("no generators: pass --generators for a user algebra");
    const lie::GenerationCertificate cert = lie::verify_decomposable_generation(alg, candidates);
    out << "candidates = " << cert.candidate_count << '\n'
        << "rank L = " << cert.rank_L << '\n'
        << "dim Ker L = " << cert.kernel_dimension << '\n'
        << "rank of candidates = " << cert.span_rank << '\n'
        << "result = " << (cert.ok ? "generated by the candidates" : "FAILED: " + cert.failure) << '\n';
    if (!cert.ok)
        out << "note: a failure of these candidates does not show that Ker L lacks a decomposable generating set\n";
    return cert.ok;
}

void cmd_lie_primitive(const LieArgs& args, std::ostream& out, std::ostream& warn) {
    const lie::LieAlgebraSpec alg = load_algebra(args, warn);
    const lie::TwoForm omega = parse_omega(alg.dim(), args.omega);
    const auto b = lie::exact_primitive(alg, omega);
    if (!b) {
        out << "not exact\n";
        return;
    }
    std::vector<std::string> dual;
    for (const auto& n : alg.basis_names()) dual.push_back(n + "*");
    out << "b = " << combination(*b, dual) << '\n';
    for (std::size_t k = 0; k < b->size(); ++k) out << "b(" << alg.basis_names()[k] << ") = " << (*b)[k].get_str() << '\n';
}

void cmd_lie_displace(const LieArgs& args, std::ostream& out, std::ostream& warn) {
    const lie::LieAlgebraSpec alg = load_algebra(args, warn);
    const lie::TwoForm omega = parse_omega(alg.dim(), args.omega);
    const auto generators = generators_for(args, alg.dim());
    const auto pair = lie::find_displacing_pair(alg, omega, generators);
    if (!pair) {
        out << "none\n";
        return;
    }
    out << "x = " << combination(pair->x, alg.basis_names()) << '\n'
        << "y = " << combination(pair->y, alg.basis_names()) << '\n'
        << "omega(x, y) = " << omega.evaluate(pair->x, pair->y).get_str() << '\n';
}

}  // namespace solenoid::cli
