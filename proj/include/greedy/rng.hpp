#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace greedy {

/// Deterministic random stream. The distribution transforms are written out
/// here instead of using <random> distributions, so that a seed produces the
/// same sequence on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in the OPEN interval (0,1).
    double uniform01() {
        return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform index in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(gen_() % static_cast<std::uint64_t>(n));
    }

    int sign() { return (gen_() & 1u) ? 1 : -1; }

    /// Standard normal via Box-Muller; generates pairs and caches one.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Exponential with unit rate, strictly positive.
    double exponential() { return -std::log(uniform01()); }

    /// A fresh 64-bit value usable as an independent sub-seed.
    std::uint64_t split() { return gen_(); }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace greedy
