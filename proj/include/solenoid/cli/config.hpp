#pragma once

// Run-wide settings shared by the numerical commands.

#include <string>

#include "solenoid/averaging.hpp"

namespace solenoid::cli {

struct RunConfig {
    double h = kDefaultStep;
    double t_max = 200.0;
    int n_nu = 201;
    int n_xi = 64;
    double return_tol = 1e-8;
    double field_tol = 1e-8;
    double pole_guard = 1e-4;
    std::string out_dir = ".";
    unsigned threads = 1;
};

/// Throws Error(invalid_input) unless every field is positive, n_nu is odd
/// and >= 3, n_xi >= 4 and h <= 0.1.
void validate(const RunConfig& config);

PeriodOptions period_options(const RunConfig& config);
EntropyOptions entropy_options(const RunConfig& config);

/// "201,64" -> (201, 64).
void parse_grid(const std::string& text, RunConfig& config);

}  // namespace solenoid::cli
