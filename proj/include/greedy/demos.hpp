#pragma once

#include <cstddef>

#include "greedy/vector.hpp"

namespace greedy {

// One greedy step on v1 = (1+eps, 1) and v2 = (1, 1+eps) over the coordinate
// basis of the plane. The inputs are eps-close but the residuals land on
// different axes, so d1/d2 = 1/eps blows up as eps -> 0: the greedy step is
// not uniformly continuous in its input.
struct InstabilityReport {
    double d1 = 0.0;    // distance between the two one-step residuals
    double d2 = 0.0;    // distance between the two inputs
    double ratio = 0.0; // d1 / d2
};

InstabilityReport instability_demo(double epsilon);

// Contrast case: a fixed linear approximant S_k (projection onto the first k
// coordinates) moves outputs no further than inputs, operator norm 1.
struct LinearBaselineReport {
    double projected_diff = 0.0; // ||S_k f - S_k f_eps||
    double input_diff = 0.0;     // ||f - f_eps||
    double K = 1.0;
    bool holds = true;           // projected_diff <= K * input_diff
};

LinearBaselineReport linear_baseline_demo(double K, std::size_t k, const Vector& f,
                                          const Vector& f_eps);

} // namespace greedy
