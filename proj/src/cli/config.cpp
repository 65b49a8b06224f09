#include "solenoid/cli/config.hpp"

#include <sstream>

#include "solenoid/error.hpp"

namespace solenoid::cli {

void validate(const RunConfig& c) {
    if (!(c.h > 0.0) || c.h > kMaxStep) throw invalid_input("step must lie in (0, 0.1]");
    if (!(c.t_max > 0.0)) throw invalid_input("t-max must be positive");
    if (c.n_nu < 3 || c.n_nu % 2 == 0) throw invalid_input("grid: n_nu must be odd and >= 3");
    if (c.n_xi < 4) throw invalid_input("grid: n_xi must be >= 4");
    if (!(c.return_tol > 0.0) || !(c.field_tol > 0.0)) throw invalid_input("tolerances must be positive");
    if (!(c.pole_guard > 0.0) || c.pole_guard >= 0.5) throw invalid_input("pole-guard must lie in (0, 0.5)");
    if (c.threads == 0) throw invalid_input("threads must be positive");
    if (c.out_dir.empty()) throw invalid_input("out-dir must not be empty");
}

PeriodOptions period_options(const RunConfig& c) {
    PeriodOptions o;
    o.h = c.h;
    o.t_max = c.t_max;
    o.return_tol = c.return_tol;
    o.field_tol = c.field_tol;
    return o;
}

EntropyOptions entropy_options(const RunConfig& c) {
    EntropyOptions o;
    o.period = period_options(c);
    o.pole_guard = c.pole_guard;
    o.threads = c.threads;
    return o;
}

void parse_grid(const std::string& text, RunConfig& config) {
    std::istringstream in(text);
    int n_nu = 0;
    int n_xi = 0;
    char comma = 0;
    if (!(in >> n_nu >> comma >> n_xi) || comma != ',' || !(in >> std::ws).eof())
        throw invalid_input("grid must be given as n_nu,n_xi");
    config.n_nu = n_nu;
    config.n_xi = n_xi;
}

}  // namespace solenoid::cli
