#pragma once

#include <vector>

#include "greedy/dictionary.hpp"
#include "greedy/schedule.hpp"
#include "greedy/trace.hpp"
#include "greedy/vector.hpp"

namespace greedy {

// Joint run on f = f_clean + noise: the noisy sequence drives atom selection,
// a clean companion follows the same atoms with its own inner products as
// coefficients. The difference sequence delta_k = f_k - companion_k obeys
//   ||delta_k||^2 = ||delta_{k-1}||^2 - b(2-b)<delta_{k-1},phi_k>^2
// exactly; violations beyond floating-point slack are implementation bugs
// and are thrown as InvariantViolation.
struct PairedTrace {
    Trace noisy;
    std::vector<double> clean_residual_norms; // k = 0..m
    std::vector<double> clean_inners;         // <companion_{k-1}, phi_k>, k = 1..m
    std::vector<double> delta_norms;          // k = 0..m
    double delta_inner_sq_sum = 0.0;          // b(2-b) sum of <delta_{j-1},phi_j>^2
};

PairedTrace run_paired(const Vector& f_clean, const Vector& noise,
                       const Dictionary& dict, const GreedyConfig& config);

} // namespace greedy
