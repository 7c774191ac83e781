#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace greedy {

enum class Termination {
    MaxIter,
    ResidualBelowAtol,
    OrthogonalResidual,
    DependentAtom,
};

const char* to_string(Termination t);

struct IterationRecord {
    std::size_t iter = 0;      // 1-based
    std::size_t atom_index = 0;
    int sign = 1;
    double y = 0.0;            // |<f_{m-1}, g>| at selection time
    double coeff = 0.0;        // expansion coefficient of sign*atom
    double residual_norm = 0.0;
};

struct Trace {
    double initial_norm = 0.0;
    std::vector<IterationRecord> records;
    Termination termination = Termination::MaxIter;

    // ||f_m||; m = 0 gives the initial norm, m past the end clamps to the
    // final residual (the sequence is constant once the algorithm stops).
    double residual_at(std::size_t m) const;
};

std::string trace_to_csv(const Trace& trace);
std::string trace_to_json(const Trace& trace);

} // namespace greedy
