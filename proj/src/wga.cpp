#include "greedy/wga.hpp"

#include "greedy/errors.hpp"

namespace greedy {

void apply_relaxed_update(Vector& f, const Vector& atom, int sign, double c, double b) {
    const double step = b * c * static_cast<double>(sign);
    for (std::size_t k = 0; k < f.dim(); ++k) {
        f[k] -= step * atom[k];
    }
}

WgaStep wga_step(const Vector& f_prev, const Dictionary& dict, double t_m, double b,
                 SelectionPolicy policy) {
    const AtomSelection sel = weak_atom(f_prev, dict, t_m, policy);
    WgaStep step{f_prev, {}, false};
    if (sel.value == 0.0) {
        step.zero_selection = true;
        step.record.residual_norm = norm(f_prev);
        return step;
    }
    apply_relaxed_update(step.next, dict.atom(sel.index), sel.sign, sel.value, b);
    step.record.atom_index = sel.index;
    step.record.sign = sel.sign;
    step.record.y = sel.value;
    step.record.coeff = b * sel.value;
    step.record.residual_norm = norm(step.next);
    return step;
}

Trace run_wga(const Vector& f, const Dictionary& dict, const GreedyConfig& config) {
    config.validate();
    check_same_dim(f, dict.atom(0));

    Trace trace;
    trace.initial_norm = norm(f);
    if (trace.initial_norm <= config.residual_atol) {
        trace.termination = Termination::ResidualBelowAtol;
        return trace;
    }

    Vector residual = f;
    for (std::size_t m = 1; m <= config.max_iter; ++m) {
        WgaStep step = wga_step(residual, dict, config.schedule.at(m), config.b,
                                config.policy);
        if (step.zero_selection) {
            trace.termination = Termination::OrthogonalResidual;
            return trace;
        }
        step.record.iter = m;
        trace.records.push_back(step.record);
        residual = std::move(step.next);
        if (step.record.residual_norm <= config.residual_atol) {
            trace.termination = Termination::ResidualBelowAtol;
            return trace;
        }
    }
    trace.termination = Termination::MaxIter;
    return trace;
}

} // namespace greedy
