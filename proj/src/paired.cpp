#include "greedy/paired.hpp"

#include <cmath>
#include <string>

#include "greedy/errors.hpp"
#include "greedy/selection.hpp"
#include "greedy/wga.hpp"

namespace greedy {

PairedTrace run_paired(const Vector& f_clean, const Vector& noise,
                       const Dictionary& dict, const GreedyConfig& config) {
    config.validate();
    check_same_dim(f_clean, noise);
    check_same_dim(f_clean, dict.atom(0));
    const double noise_norm = norm(noise);
    if (noise_norm > 1.0 + 1e-12) {
        throw ConfigError("noise norm must be at most 1, got " +
                          std::to_string(noise_norm));
    }

    Vector f = add(f_clean, noise);
    Vector companion = f_clean;
    Vector delta = noise; // evolved by its own recursion; see consistency check

    PairedTrace out;
    out.noisy.initial_norm = norm(f);
    out.clean_residual_norms.push_back(norm(companion));
    out.delta_norms.push_back(norm(delta));

    // fp slack for comparing the recursed delta against f_k - companion_k;
    // catches wrong atom/sign/coefficient wiring, which shows up at
    // noise scale, far above accumulated rounding.
    const double consistency_tol = 1e-9 * std::max(1.0, out.noisy.initial_norm);

    if (out.noisy.initial_norm <= config.residual_atol) {
        out.noisy.termination = Termination::ResidualBelowAtol;
        return out;
    }

    const double bb = config.b * (2.0 - config.b);
    double delta_sq_prev = norm_sq(delta);

    out.noisy.termination = Termination::MaxIter;
    for (std::size_t m = 1; m <= config.max_iter; ++m) {
        const AtomSelection sel =
            weak_atom(f, dict, config.schedule.at(m), config.policy);
        if (sel.value == 0.0) {
            out.noisy.termination = Termination::OrthogonalResidual;
            break;
        }
        const Vector& atom = dict.atom(sel.index);

        const double ci = inner(companion, atom);
        const double di = inner(delta, atom);

        apply_relaxed_update(f, atom, sel.sign, sel.value, config.b);
        apply_relaxed_update(companion, atom, 1, ci, config.b);
        apply_relaxed_update(delta, atom, 1, di, config.b);

        IterationRecord rec;
        rec.iter = m;
        rec.atom_index = sel.index;
        rec.sign = sel.sign;
        rec.y = sel.value;
        rec.coeff = config.b * sel.value;
        rec.residual_norm = norm(f);
        out.noisy.records.push_back(rec);

        out.clean_residual_norms.push_back(norm(companion));
        out.clean_inners.push_back(static_cast<double>(sel.sign) * ci);

        const double delta_sq = norm_sq(delta);
        const double drop = bb * di * di;
        const double predicted = delta_sq_prev - drop;
        if (std::abs(delta_sq - predicted) > 1e-10 * (delta_sq_prev + 1e-300)) {
            throw InvariantViolation(
                m, "squared-difference recursion off by " +
                       std::to_string(delta_sq - predicted) + " at scale " +
                       std::to_string(delta_sq_prev));
        }
        const double delta_norm = std::sqrt(std::max(0.0, delta_sq));
        if (delta_norm > out.delta_norms.back() + 1e-12) {
            throw InvariantViolation(m, "difference norm increased from " +
                                            std::to_string(out.delta_norms.back()) +
                                            " to " + std::to_string(delta_norm));
        }
        out.delta_inner_sq_sum += drop;
        if (out.delta_inner_sq_sum > out.delta_norms.front() * out.delta_norms.front() + 1e-10) {
            throw InvariantViolation(m, "accumulated difference energy " +
                                            std::to_string(out.delta_inner_sq_sum) +
                                            " exceeds initial " +
                                            std::to_string(out.delta_norms.front() *
                                                           out.delta_norms.front()));
        }
        Vector direct = sub(f, companion);
        axpy(-1.0, delta, direct);
        if (norm(direct) > consistency_tol) {
            throw InvariantViolation(
                m, "recursed difference drifted from sequence difference by " +
                       std::to_string(norm(direct)));
        }
        out.delta_norms.push_back(delta_norm);
        delta_sq_prev = delta_sq;

        if (rec.residual_norm <= config.residual_atol) {
            out.noisy.termination = Termination::ResidualBelowAtol;
            break;
        }
    }
    return out;
}

} // namespace greedy
