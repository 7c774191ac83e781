#include "greedy/oga.hpp"

#include <cmath>

#include "greedy/errors.hpp"
#include "greedy/selection.hpp"

namespace greedy {
namespace {

constexpr double kDependentAtomTol = 1e-10;

// Subtracts the basis components from v, recording ⟨v, q_j⟩ increments into
// r_col when given. Run twice per new atom: a single MGS pass leaves O(eps)
// residue along earlier directions once the basis grows.
void orthogonalize_against(Vector& v, const std::vector<Vector>& basis,
                           std::vector<double>* r_col) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const double c = inner(v, basis[j]);
        axpy(-c, basis[j], v);
        if (r_col) (*r_col)[j] += c;
    }
}

} // namespace

Vector project_residual(const Vector& f0, const std::vector<Vector>& basis) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
        check_same_dim(f0, basis[i]);
        if (std::abs(norm(basis[i]) - 1.0) > 1e-8) {
            throw NumericalError("projection basis vector " + std::to_string(i) +
                                 " is not unit length");
        }
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (std::abs(inner(basis[i], basis[j])) > 1e-8) {
                throw NumericalError("projection basis vectors " + std::to_string(i) +
                                     " and " + std::to_string(j) +
                                     " are not orthogonal");
            }
        }
    }
    Vector r = f0;
    for (const Vector& u : basis) {
        axpy(-inner(f0, u), u, r);
    }
    return r;
}

Trace run_oga(const Vector& f, const Dictionary& dict, const GreedyConfig& config,
              OgaCapture* capture) {
    config.validate();
    check_same_dim(f, dict.atom(0));

    Trace trace;
    trace.initial_norm = norm(f);
    if (capture) {
        *capture = OgaCapture{};
        capture->residuals.push_back(f);
    }
    if (trace.initial_norm <= config.residual_atol) {
        trace.termination = Termination::ResidualBelowAtol;
        return trace;
    }

    std::vector<Vector> basis;      // orthonormal q_1..q_m
    std::vector<std::vector<double>> r_cols; // R factor: signed atom_m = sum R[j][m] q_j
    Vector residual = f;

    trace.termination = Termination::MaxIter;
    for (std::size_t m = 1; m <= config.max_iter; ++m) {
        const AtomSelection sel =
            weak_atom(residual, dict, config.schedule.at(m), config.policy);
        if (sel.value == 0.0) {
            trace.termination = Termination::OrthogonalResidual;
            break;
        }

        Vector v = scaled(dict.atom(sel.index), static_cast<double>(sel.sign));
        std::vector<double> r_col(basis.size() + 1, 0.0);
        orthogonalize_against(v, basis, &r_col);
        orthogonalize_against(v, basis, &r_col);
        const double vn = norm(v);
        if (vn < kDependentAtomTol) {
            trace.termination = Termination::DependentAtom;
            break;
        }
        r_col[basis.size()] = vn;
        scale(v, 1.0 / vn);
        basis.push_back(std::move(v));
        r_cols.push_back(std::move(r_col));

        residual = f;
        for (const Vector& q : basis) {
            axpy(-inner(f, q), q, residual);
        }

        IterationRecord rec;
        rec.iter = m;
        rec.atom_index = sel.index;
        rec.sign = sel.sign;
        rec.y = sel.value;
        rec.residual_norm = norm(residual);
        trace.records.push_back(rec);
        if (capture) {
            capture->residuals.push_back(residual);
            capture->selected.push_back(sel.index);
            capture->signs.push_back(sel.sign);
        }
        if (rec.residual_norm <= config.residual_atol) {
            trace.termination = Termination::ResidualBelowAtol;
            break;
        }
    }

    // Back-substitute R c = beta, beta_j = <f, q_j>, so coeff holds the
    // least-squares coefficient of each signed atom in the final approximant.
    const std::size_t n = basis.size();
    if (n > 0) {
        std::vector<double> c(n);
        for (std::size_t j = 0; j < n; ++j) c[j] = inner(f, basis[j]);
        for (std::size_t i = n; i-- > 0;) {
            double s = c[i];
            for (std::size_t j = i + 1; j < n; ++j) s -= r_cols[j][i] * c[j];
            c[i] = s / r_cols[i][i];
        }
        for (std::size_t i = 0; i < n; ++i) trace.records[i].coeff = c[i];
    }
    return trace;
}

} // namespace greedy
