#pragma once

#include "greedy/dictionary.hpp"
#include "greedy/schedule.hpp"
#include "greedy/selection.hpp"
#include "greedy/trace.hpp"
#include "greedy/vector.hpp"

namespace greedy {

struct WgaStep {
    Vector next;
    IterationRecord record;
    bool zero_selection = false; // residual orthogonal to every atom
};

// In-place relaxed update f -= b * c * sign * atom. Shared by every greedy
// driver so companion sequences evolve bitwise identically.
void apply_relaxed_update(Vector& f, const Vector& atom, int sign, double c, double b);

// One iteration of the weak greedy algorithm with relaxation b.
WgaStep wga_step(const Vector& f_prev, const Dictionary& dict, double t_m, double b,
                 SelectionPolicy policy);

Trace run_wga(const Vector& f, const Dictionary& dict, const GreedyConfig& config);

} // namespace greedy
