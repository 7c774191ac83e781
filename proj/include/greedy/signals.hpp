#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "greedy/dictionary.hpp"
#include "greedy/vector.hpp"

namespace greedy {

// Witness that signal/scale lies in the convex hull of the signed atoms:
// signal = scale * sum weights_i * signs_i * atom(indices_i), weights >= 0,
// sum weights <= 1.
struct A1Certificate {
    std::vector<std::size_t> indices;
    std::vector<int> signs;
    std::vector<double> weights;
    double scale = 1.0;
};

Vector certificate_signal(const A1Certificate& cert, const Dictionary& dict);

// Random sparse hull point: distinct atoms, random signs, simplex weights
// (normalized exponentials, sum exactly renormalized to 1). Deterministic
// per seed.
std::pair<Vector, A1Certificate> gen_a1_signal(const Dictionary& dict, double B,
                                               std::size_t sparsity,
                                               std::uint64_t seed);

enum class NoiseMode { Exact, AtMost };

// f_clean + e with ||e|| = epsilon (Exact) or ||e|| uniform in [0,epsilon]
// (AtMost); direction uniform on the sphere.
Vector add_noise(const Vector& f_clean, double epsilon, NoiseMode mode,
                 std::uint64_t seed);

// Fixed-direction variant for adversarial reproduction; direction need not be
// normalized, only nonzero.
Vector add_noise_along(const Vector& f_clean, double epsilon,
                       const Vector& direction);

} // namespace greedy
