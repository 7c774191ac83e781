#include "greedy/dictionary.hpp"

#include <cmath>
#include <utility>

#include "greedy/errors.hpp"
#include "greedy/rng.hpp"

namespace greedy {

Dictionary::Dictionary(std::vector<Vector> atoms, std::string label)
    : atoms_(std::move(atoms)), label_(std::move(label)) {
    if (atoms_.empty()) throw ConfigError("dictionary needs at least one atom");
    const std::size_t d = atoms_.front().dim();
    if (d == 0) throw ConfigError("dictionary dimension must be >= 1");
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].dim() != d) {
            throw ConfigError("atom " + std::to_string(i) + " has dimension " +
                              std::to_string(atoms_[i].dim()) + ", expected " +
                              std::to_string(d));
        }
        if (!all_finite(atoms_[i])) {
            throw ConfigError("atom " + std::to_string(i) + " has non-finite entries");
        }
        const double n = norm(atoms_[i]);
        if (n < 1e-12) {
            throw ZeroAtomError("atom " + std::to_string(i) +
                                " has norm below 1e-12 and cannot be normalized");
        }
        scale(atoms_[i], 1.0 / n);
    }
}

Dictionary make_orthonormal_dictionary(std::size_t dim, std::size_t count) {
    if (dim < 1 || count < 1) throw ConfigError("dim and count must be >= 1");
    if (count > dim) {
        throw ConfigError("an orthonormal dictionary holds at most dim atoms");
    }
    std::vector<Vector> atoms;
    atoms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        Vector e(dim);
        e[i] = 1.0;
        atoms.push_back(std::move(e));
    }
    return Dictionary(std::move(atoms), "orthonormal:" + std::to_string(count) +
                                            "x" + std::to_string(dim));
}

namespace {

Vector random_unit_vector(std::size_t dim, Rng& rng) {
    Vector v(dim);
    for (;;) {
        for (std::size_t i = 0; i < dim; ++i) v[i] = rng.normal();
        const double n = norm(v);
        if (n > 1e-12) {
            scale(v, 1.0 / n);
            return v;
        }
    }
}

} // namespace

Dictionary make_random_unit_dictionary(std::size_t dim, std::size_t count,
                                       std::uint64_t seed) {
    if (dim < 1 || count < 1) throw ConfigError("dim and count must be >= 1");
    Rng rng(seed);
    std::vector<Vector> atoms;
    atoms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) atoms.push_back(random_unit_vector(dim, rng));
    return Dictionary(std::move(atoms), "random-unit:" + std::to_string(count) +
                                            "x" + std::to_string(dim));
}

Dictionary make_coherent_dictionary(std::size_t dim, std::size_t count,
                                    std::uint64_t seed) {
    if (dim < 1 || count < 1) throw ConfigError("dim and count must be >= 1");
    Rng rng(seed);
    std::vector<Vector> atoms;
    atoms.reserve(count);
    for (std::size_t i = 0; i < count; ++i) atoms.push_back(random_unit_vector(dim, rng));
    // Rebuild every odd-indexed atom as cos*previous + sin*orthogonal part,
    // pinning the pair's inner product at 0.95.
    const double c = 0.95;
    const double s = std::sqrt(1.0 - c * c);
    for (std::size_t i = 1; i < count; i += 2) {
        const Vector& base = atoms[i - 1];
        Vector w = atoms[i];
        axpy(-inner(w, base), base, w);
        double wn = norm(w);
        if (wn < 1e-8) {
            // atom i was already parallel to its partner; take any coordinate
            // direction with a component off the base
            for (std::size_t k = 0; k < dim; ++k) {
                w = Vector(dim);
                w[k] = 1.0;
                axpy(-inner(w, base), base, w);
                wn = norm(w);
                if (wn >= 1e-8) break;
            }
        }
        if (wn < 1e-8) continue; // dim == 1: coherence is already 1
        scale(w, 1.0 / wn);
        Vector mixed = scaled(base, c);
        axpy(s, w, mixed);
        atoms[i] = std::move(mixed);
    }
    return Dictionary(std::move(atoms), "coherent:" + std::to_string(count) + "x" +
                                            std::to_string(dim));
}

double max_coherence(const Dictionary& dict) {
    double best = 0.0;
    for (std::size_t i = 0; i < dict.size(); ++i) {
        for (std::size_t j = i + 1; j < dict.size(); ++j) {
            best = std::max(best, std::abs(inner(dict.atom(i), dict.atom(j))));
        }
    }
    return best;
}

} // namespace greedy
