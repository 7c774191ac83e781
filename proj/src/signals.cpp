#include "greedy/signals.hpp"

#include <cmath>
#include <string>

#include "greedy/errors.hpp"
#include "greedy/rng.hpp"

namespace greedy {

Vector certificate_signal(const A1Certificate& cert, const Dictionary& dict) {
    Vector f(std::vector<double>(dict.dim(), 0.0));
    for (std::size_t i = 0; i < cert.indices.size(); ++i) {
        axpy(cert.scale * cert.weights[i] * static_cast<double>(cert.signs[i]),
             dict.atom(cert.indices[i]), f);
    }
    return f;
}

std::pair<Vector, A1Certificate> gen_a1_signal(const Dictionary& dict, double B,
                                               std::size_t sparsity,
                                               std::uint64_t seed) {
    if (!(B > 0.0)) {
        throw ConfigError("B must be positive, got " + std::to_string(B));
    }
    if (sparsity < 1) {
        throw ConfigError("sparsity must be at least 1");
    }
    if (sparsity > dict.size()) {
        throw ConfigError("sparsity " + std::to_string(sparsity) +
                          " exceeds dictionary size " + std::to_string(dict.size()));
    }
    Rng rng(seed);

    // partial Fisher-Yates over index pool for distinct picks
    std::vector<std::size_t> pool(dict.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    A1Certificate cert;
    cert.scale = B;
    for (std::size_t i = 0; i < sparsity; ++i) {
        const std::size_t j = i + rng.uniform_index(pool.size() - i);
        std::swap(pool[i], pool[j]);
        cert.indices.push_back(pool[i]);
        cert.signs.push_back(rng.sign());
    }

    double total = 0.0;
    for (std::size_t i = 0; i < sparsity; ++i) {
        cert.weights.push_back(rng.exponential());
        total += cert.weights.back();
    }
    for (double& w : cert.weights) w /= total;
    double check = 0.0;
    for (double w : cert.weights) check += w;
    if (check > 1.0) {
        for (double& w : cert.weights) w /= check;
    }

    return {certificate_signal(cert, dict), std::move(cert)};
}

Vector add_noise_along(const Vector& f_clean, double epsilon,
                       const Vector& direction) {
    check_same_dim(f_clean, direction);
    const double n = norm(direction);
    if (!(n > 0.0)) {
        throw ConfigError("noise direction must be nonzero");
    }
    Vector f = f_clean;
    axpy(epsilon / n, direction, f);
    return f;
}

Vector add_noise(const Vector& f_clean, double epsilon, NoiseMode mode,
                 std::uint64_t seed) {
    if (!(epsilon > 0.0 && epsilon <= 1.0)) {
        throw ConfigError("epsilon must lie in (0,1], got " + std::to_string(epsilon));
    }
    Rng rng(seed);
    Vector dir(std::vector<double>(f_clean.dim(), 0.0));
    double n = 0.0;
    do {
        for (std::size_t k = 0; k < dir.dim(); ++k) dir[k] = rng.normal();
        n = norm(dir);
    } while (!(n > 1e-12));
    const double radius =
        (mode == NoiseMode::Exact) ? epsilon : epsilon * rng.uniform01();
    Vector f = f_clean;
    axpy(radius / n, dir, f);
    return f;
}

} // namespace greedy
