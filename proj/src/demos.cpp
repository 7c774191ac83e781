#include "greedy/demos.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "greedy/dictionary.hpp"
#include "greedy/errors.hpp"
#include "greedy/wga.hpp"

namespace greedy {

InstabilityReport instability_demo(double epsilon) {
    if (!(epsilon > 0.0)) {
        throw ConfigError("epsilon must be positive, got " + std::to_string(epsilon));
    }
    const Dictionary dict = make_orthonormal_dictionary(2, 2);
    const Vector v1(std::vector<double>{1.0 + epsilon, 1.0});
    const Vector v2(std::vector<double>{1.0, 1.0 + epsilon});

    const WgaStep s1 = wga_step(v1, dict, 1.0, 1.0, SelectionPolicy::Max);
    const WgaStep s2 = wga_step(v2, dict, 1.0, 1.0, SelectionPolicy::Max);

    InstabilityReport report;
    report.d1 = norm(sub(s1.next, s2.next));
    report.d2 = norm(sub(v1, v2));
    report.ratio = report.d1 / report.d2;
    return report;
}

LinearBaselineReport linear_baseline_demo(double K, std::size_t k, const Vector& f,
                                          const Vector& f_eps) {
    if (!(K >= 1.0)) {
        throw ConfigError("K must be at least 1, got " + std::to_string(K));
    }
    check_same_dim(f, f_eps);
    if (k > f.dim()) {
        throw ConfigError("k = " + std::to_string(k) + " exceeds dimension " +
                          std::to_string(f.dim()));
    }
    double proj_sq = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const double d = f[i] - f_eps[i];
        proj_sq += d * d;
    }
    LinearBaselineReport report;
    report.projected_diff = std::sqrt(proj_sq);
    report.input_diff = norm(sub(f, f_eps));
    report.K = K;
    report.holds = report.projected_diff <= K * report.input_diff + 1e-12;
    return report;
}

} // namespace greedy
