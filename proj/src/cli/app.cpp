#include "solenoid/cli/app.hpp"

#include <ostream>

#include "CLI11.hpp"
#include "solenoid/cli/commands.hpp"
#include "solenoid/error.hpp"

namespace solenoid::cli {

namespace {

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_input: return kExitUsage;
        case ErrorKind::domain: return kExitDomain;
        case ErrorKind::numerical: return kExitNumerical;
    }
    return kExitNumerical;
}

void add_lie_options(CLI::App* cmd, LieArgs& args) {
    cmd->add_option("--algebra", args.algebra, "built-in name or structure-constant file")->required();
    cmd->add_option("--n", args.n, "size parameter of the built-in family");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Magnetic flows on Sol-manifolds: orbit averages, Liouville entropy, lattices and the "
                 "exact Lie-algebra toolkit.",
                 "solenoid"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "solenoid.conf", "key=value settings file (flags override it)");

    RunConfig config;
    // A vector so that an unquoted "grid=201,64" in the config file, which
    // CLI11 splits at the comma, parses the same way as the flag.
    std::vector<std::string> grid{"201", "64"};
    app.add_option("--step", config.h, "fixed RK4 step h")->capture_default_str();
    app.add_option("--t-max", config.t_max, "Birkhoff fallback horizon")->capture_default_str();
    app.add_option("--grid", grid, "entropy grid n_nu,n_xi")->delimiter(',')->expected(2)->capture_default_str();
    app.add_option("--return-tol", config.return_tol, "period return tolerance")->capture_default_str();
    app.add_option("--field-tol", config.field_tol, "stationary-point threshold on |E|")->capture_default_str();
    app.add_option("--pole-guard", config.pole_guard, "entropy quadrature pole guard")->capture_default_str();
    app.add_option("--out-dir", config.out_dir, "directory for default output files")->capture_default_str();
    app.add_option("--threads", config.threads, "worker threads for entropy grids")->capture_default_str();

    NubarArgs nubar;
    double f_min = 0.0, f_max = 0.0;
    auto* c_nubar = app.add_subcommand("nubar", "nu_bar as a function of the level f");
    c_nubar->add_option("--s", nubar.s, "magnetic intensity")->required();
    auto* o_fmin = c_nubar->add_option("--f-min", f_min, "lowest level");
    auto* o_fmax = c_nubar->add_option("--f-max", f_max, "highest level");
    c_nubar->add_option("--samples", nubar.samples, "number of levels")->capture_default_str();
    c_nubar->add_option("--out", nubar.out, "CSV path");

    EntropyArgs ent;
    std::string s_list, s_range;
    auto* c_entropy = app.add_subcommand("entropy", "Liouville entropy against s");
    auto* o_list = c_entropy->add_option("--s-list", s_list, "comma-separated intensities");
    auto* o_range = c_entropy->add_option("--s-range", s_range, "lo:hi:step (0 is skipped)");
    o_list->excludes(o_range);
    c_entropy->add_option("--out", ent.out, "CSV path");

    OrbitArgs orbit;
    std::string seed;
    auto* c_orbit = app.add_subcommand("orbit", "trajectory with conserved quantities");
    c_orbit->add_option("--mode", orbit.mode, "euler | sol | variation")
        ->check(CLI::IsMember({"euler", "sol", "variation"}))
        ->capture_default_str();
    c_orbit->add_option("--s", orbit.s, "magnetic intensity")->required();
    c_orbit->add_option("--seed", seed, "3, 6 or 8 reals by mode")->required();
    c_orbit->add_option("--t-end", orbit.t_end, "integration time")->capture_default_str();
    c_orbit->add_option("--stride", orbit.stride, "write every stride-th step")->capture_default_str();
    c_orbit->add_option("--out", orbit.out, "CSV path");

    std::string matrix;
    auto* c_lattice = app.add_subcommand("lattice", "lambda, diagonalizer and volume of a lattice");
    c_lattice->add_option("--matrix", matrix, "a,b,c,d")->required();

    LieArgs lie;
    auto* c_lie = app.add_subcommand("lie", "exact Lie-algebra toolkit");
    c_lie->require_subcommand(1);
    auto* l_b2 = c_lie->add_subcommand("b2", "second Chevalley-Eilenberg Betti number");
    auto* l_kernel = c_lie->add_subcommand("kernel", "exact basis of Ker L");
    auto* l_check = c_lie->add_subcommand("check-generators", "verify that decomposable 2-vectors generate Ker L");
    auto* l_prim = c_lie->add_subcommand("primitive", "solve omega = b o L exactly");
    auto* l_disp = c_lie->add_subcommand("displace", "commuting pair with omega(x, y) != 0");
    for (auto* cmd : {l_b2, l_kernel, l_check, l_prim, l_disp}) add_lie_options(cmd, lie);
    for (auto* cmd : {l_check, l_disp})
        cmd->add_option("--generators", lie.generators, "file of 'x coords | y coords' lines");
    for (auto* cmd : {l_prim, l_disp})
        cmd->add_option("--omega", lie.omega, "triples 'i j value', 1-based")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        parse_grid(grid[0] + "," + grid[1], config);
        validate(config);
        if (c_nubar->parsed()) {
            if (o_fmin->count()) nubar.f_min = f_min;
            if (o_fmax->count()) nubar.f_max = f_max;
            cmd_nubar(config, nubar, err);
        } else if (c_entropy->parsed()) {
            if (o_list->count())
                ent.s_values = parse_s_list(s_list);
            else if (o_range->count())
                ent.s_values = parse_s_range(s_range);
            cmd_entropy(config, ent, err);
        } else if (c_orbit->parsed()) {
            orbit.seed = parse_reals(seed);
            cmd_orbit(config, orbit, err);
        } else if (c_lattice->parsed()) {
            cmd_lattice(parse_matrix(matrix), out);
        } else if (l_b2->parsed()) {
            cmd_lie_b2(lie, out, err);
        } else if (l_kernel->parsed()) {
            cmd_lie_kernel(lie, out, err);
        } else if (l_check->parsed()) {
            cmd_lie_check_generators(lie, out, err);
        } else if (l_prim->parsed()) {
            cmd_lie_primitive(lie, out, err);
        } else if (l_disp->parsed()) {
            cmd_lie_displace(lie, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitOk;
}

}  // namespace solenoid::cli
