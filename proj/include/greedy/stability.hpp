#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greedy/dictionary.hpp"
#include "greedy/paired.hpp"
#include "greedy/schedule.hpp"

namespace greedy {

struct StabilityRow {
    std::size_t m = 0;
    double residual_norm = 0.0; // noisy run
    double bound_value = 0.0;
    double b_diag = 0.0;        // B_m = B_{m-1} + b*y_m, B_0 = B+1
    double delta_norm = 0.0;
    bool bound_satisfied = true; // residual_norm <= bound_value + 1e-9
};

struct StabilityConfig {
    std::string dict_label;
    std::size_t dim = 0;
    std::size_t atom_count = 0;
    double B = 1.0;
    std::size_t sparsity = 1;
    double epsilon = 0.1;
    double h = 0.9;
    double b = 1.0;
    std::vector<double> schedule; // single entry for a constant schedule
    std::string policy;
    std::uint64_t seed = 0;
    std::size_t iterations = 0;  // capped at floor(epsilon^-2)
};

struct StabilitySummary {
    double max_violation = 0.0;  // max over m of residual - bound
    std::size_t window_lo = 0;   // ceil((2 eps)^-2)
    std::size_t window_hi = 0;   // floor(eps^-2)
    double window_max_residual = 0.0;
    double rate_exponent = 0.0;  // beta/(1+beta) at the window's end
    double rate_scale = 0.0;     // epsilon^rate_exponent
    double rate_ratio = 0.0;     // window_max_residual / rate_scale
};

struct StabilityReport {
    StabilityConfig config;
    std::vector<StabilityRow> rows;
    StabilitySummary summary;
    bool all_satisfied = true;
    double noisy_norm = 0.0;
    double clean_norm = 0.0;
    double noise_norm = 0.0;
    // companion sequence residuals from the paired run, k = 0..m
    std::vector<double> companion_clean_norms;
    // independent run on the clean signal with its own selection, plus the
    // noise-free guarantee values B*e_m for comparison, k = 0..m
    std::vector<double> direct_clean_norms;
    std::vector<double> direct_clean_bounds;
};

StabilityReport stability_experiment(const Dictionary& dict, double B,
                                     std::size_t sparsity, double epsilon, double h,
                                     const GreedyConfig& config, std::uint64_t seed);

std::string stability_to_csv(const StabilityReport& report);
std::string stability_to_json(const StabilityReport& report);

} // namespace greedy
