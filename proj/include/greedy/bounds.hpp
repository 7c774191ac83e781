#pragma once

#include <cstddef>
#include <vector>

#include "greedy/schedule.hpp"

namespace greedy {

struct NoisyBoundParams {
    double epsilon = 0.1;   // noise level, in (0,1]
    double B = 1.0;         // scaling of the clean signal's hull membership
    double h = 0.9;         // weakness margin, in (0,1)
    double f_norm = 1.0;    // norm of the noisy input
    double b = 1.0;
    WeakSchedule schedule = WeakSchedule::constant(1.0);

    void validate() const;
};

// Residual decay factor for the noise-free algorithm; m = 0 gives 1.
double e_m_clean(const WeakSchedule& schedule, double b, std::size_t m);

double beta_k(double b, double h, double t_k);

// Largest iteration the noisy guarantee covers: floor(epsilon^-2).
std::size_t max_regime_iterations(double epsilon);

// Residual bound for the noisy run after m iterations, m in [1, floor(eps^-2)].
double noisy_bound(const NoisyBoundParams& params, std::size_t m);

// Same guarantee specialized to a constant schedule.
double noisy_bound_const(double t, double b, double h, double epsilon, double B,
                         std::size_t m);

// Orthogonal-variant residual bound under noise: max{2 eps, 4(B+eps)(1+m)^-1/2}.
double oga_noisy_bound(double epsilon, double B, std::size_t m);

// Orthogonal-variant clean rate m^-1/2, m >= 1.
double oga_clean_bound(std::size_t m);

// Upper bound for any nonnegative sequence with x_0 <= C and
// x_m <= x_{m-1}(1 - x_{m-1} v_m): returns (C^-1 + sum_{k<=m} v_k)^-1.
double hl1_bound(double C, const std::vector<double>& v, std::size_t m);

// Extremal admissible sequence (equality in the recursion, clamped at 0).
std::vector<double> hl1_worst_sequence(double C, const std::vector<double>& v);

} // namespace greedy
