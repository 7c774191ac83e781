#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "greedy/vector.hpp"

namespace greedy {

/// Finite set of unit-norm atoms sharing one ambient dimension. Atoms are
/// normalized on construction. Opposite-sign atoms are never stored: every
/// search runs over +/-g via signed inner products.
class Dictionary {
public:
    Dictionary(std::vector<Vector> atoms, std::string label);

    std::size_t size() const { return atoms_.size(); }
    std::size_t dim() const { return atoms_.front().dim(); }
    const Vector& atom(std::size_t i) const { return atoms_[i]; }
    const std::vector<Vector>& atoms() const { return atoms_; }
    const std::string& label() const { return label_; }

private:
    std::vector<Vector> atoms_;
    std::string label_;
};

Dictionary make_orthonormal_dictionary(std::size_t dim, std::size_t count);

Dictionary make_random_unit_dictionary(std::size_t dim, std::size_t count,
                                       std::uint64_t seed);

/// Random unit atoms post-processed so that some pair has coherence
/// |<g_i,g_j>| >= 0.9; stress input for selection ties.
Dictionary make_coherent_dictionary(std::size_t dim, std::size_t count,
                                    std::uint64_t seed);

/// Largest |<g_i,g_j>| over distinct atom pairs; 0 for a single atom.
double max_coherence(const Dictionary& dict);

} // namespace greedy
