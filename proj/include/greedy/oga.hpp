#pragma once

#include <vector>

#include "greedy/dictionary.hpp"
#include "greedy/schedule.hpp"
#include "greedy/trace.hpp"
#include "greedy/vector.hpp"

namespace greedy {

// f0 - sum <f0,u_j> u_j. Basis must be pairwise orthonormal within 1e-8.
Vector project_residual(const Vector& f0, const std::vector<Vector>& basis);

// Optional sink for internals the Trace does not carry: residual vectors
// f_0..f_m and the selected (signed) atom indices, for orthogonality audits.
struct OgaCapture {
    std::vector<Vector> residuals;
    std::vector<std::size_t> selected;
    std::vector<int> signs;
};

// Weak orthogonal greedy: select on the residual, project f onto the span of
// everything selected so far. config.b is ignored (projection has no
// relaxation); t == 1 gives plain OGA. Record coeff holds the atom's final
// least-squares expansion coefficient, so reconstruction from the trace
// reproduces the last residual.
Trace run_oga(const Vector& f, const Dictionary& dict, const GreedyConfig& config,
              OgaCapture* capture = nullptr);

} // namespace greedy
