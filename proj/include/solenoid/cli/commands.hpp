#pragma once

// The work behind each subcommand, independent of argument parsing. Errors
// are reported by throwing solenoid::Error; run_cli maps them to exit codes.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "solenoid/cli/config.hpp"
#include "solenoid/lattice.hpp"
#include "solenoid/lie/displace.hpp"

namespace solenoid::cli {

struct NubarArgs {
    double s = 0.0;
    std::optional<double> f_min;  // default: just inside the range of f
    std::optional<double> f_max;
    int samples = 101;
    std::string out;  // default: <out-dir>/nubar_s<s>.csv
};

/// Writes "f,nu_bar,converged" sorted by f plus a gnuplot script; returns the CSV path.
std::string cmd_nubar(const RunConfig& config, const NubarArgs& args, std::ostream& log);

struct EntropyArgs {
    std::vector<double> s_values;
    std::string out;  // default: <out-dir>/entropy.csv
};

/// "0.5,1,2" -> values; rejects s = 0.
std::vector<double> parse_s_list(const std::string& text);
/// "lo:hi:step" -> lo, lo + step, ... <= hi, skipping s = 0.
std::vector<double> parse_s_range(const std::string& text);

/// Writes "s,h_mu,fallback_fraction"; returns the CSV path.
std::string cmd_entropy(const RunConfig& config, const EntropyArgs& args, std::ostream& log);

struct OrbitArgs {
    std::string mode = "euler";  // euler | sol | variation
    double s = 0.0;
    std::vector<double> seed;    // 3, 6 or 8 reals by mode
    double t_end = 10.0;
    int stride = 10;             // write every stride-th step
    std::string out;             // default: <out-dir>/orbit_<mode>.csv
};

std::vector<double> parse_reals(const std::string& text);

/// Writes the trajectory with its conserved-quantity columns; returns the CSV path.
std::string cmd_orbit(const RunConfig& config, const OrbitArgs& args, std::ostream& log);

/// "a,b,c,d" -> [[a, b], [c, d]].
IntMatrix2 parse_matrix(const std::string& text);

void cmd_lattice(const IntMatrix2& A, std::ostream& out);

struct LieArgs {
    std::string algebra;     // built-in name or path of a structure-constant file
    int n = 0;
    std::string omega;       // "i j value ..." triples, 1-based
    std::string generators;  // optional file of "x coords | y coords" lines
};

lie::LieAlgebraSpec load_algebra(const LieArgs& args, std::ostream& warn);
lie::TwoForm parse_omega(std::size_t dim, const std::string& text);
std::vector<lie::TwoVector> load_generators(std::size_t dim, const std::string& path);

void cmd_lie_b2(const LieArgs& args, std::ostream& out, std::ostream& warn);
void cmd_lie_kernel(const LieArgs& args, std::ostream& out, std::ostream& warn);
/// Returns false when the check fails (the CLI still exits 0 and prints why).
bool cmd_lie_check_generators(const LieArgs& args, std::ostream& out, std::ostream& warn);
void cmd_lie_primitive(const LieArgs& args, std::ostream& out, std::ostream& warn);
void cmd_lie_displace(const LieArgs& args, std::ostream& out, std::ostream& warn);

}  // namespace solenoid::cli
