#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <string>

#include <json.hpp>

#include "greedy/bounds.hpp"
#include "greedy/dictionary.hpp"
#include "greedy/errors.hpp"
#include "greedy/rng.hpp"
#include "greedy/signals.hpp"
#include "greedy/stability.hpp"

using namespace greedy;

namespace {

GreedyConfig default_run() {
    GreedyConfig config;
    config.max_iter = 1000;
    config.residual_atol = 0.0;
    return config;
}

} // namespace

TEST_CASE("experiment over an orthonormal dictionary") {
    const Dictionary dict = make_orthonormal_dictionary(16, 16);
    const StabilityReport r =
        stability_experiment(dict, 1.0, 4, 0.2, 0.9, default_run(), 7);

    // over an orthonormal basis every step zeroes one coordinate exactly, so
    // the run stops at the dimension even though the cap allows 25
    CHECK(r.rows.size() == 16);
    CHECK(r.config.iterations == 25);
    CHECK(r.config.dim == 16);
    CHECK(r.config.atom_count == 16);
    CHECK(r.config.epsilon == 0.2);
    CHECK(r.config.seed == 7);

    CHECK(r.noise_norm == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(r.all_satisfied);

    double prev_b = 2.0; // B + 1
    std::size_t expected_m = 1;
    for (const auto& row : r.rows) {
        CHECK(row.m == expected_m);
        ++expected_m;
        CHECK(row.b_diag >= prev_b - 1e-15);
        prev_b = row.b_diag;
        CHECK(row.delta_norm <= 0.2 + 1e-9);
        CHECK(row.bound_satisfied);
        CHECK(row.residual_norm <= row.bound_value + 1e-9);
    }

    CHECK(r.summary.window_lo == 7); // ceil(1 / (4 * 0.04))
    CHECK(r.summary.window_hi == 25);
    CHECK(r.summary.max_violation <= 0.0 + 1e-9);
    // t = b = 1: beta = h/2, so beta/(1+beta) = h/(2+h)
    CHECK(r.summary.rate_exponent ==
          doctest::Approx(0.9 / 2.9).epsilon(1e-15));

    CHECK(r.companion_clean_norms.size() == r.rows.size() + 1);
    REQUIRE(r.direct_clean_norms.size() == r.direct_clean_bounds.size());
    for (std::size_t m = 0; m < r.direct_clean_norms.size(); ++m) {
        CHECK(r.direct_clean_norms[m] <= r.direct_clean_bounds[m] + 1e-9);
    }
}

TEST_CASE("experiment over a redundant random dictionary") {
    const Dictionary dict = make_random_unit_dictionary(16, 64, 21);
    const StabilityReport r =
        stability_experiment(dict, 1.0, 8, 0.2, 0.9, default_run(), 3);
    // no exact cancellation here; the run uses the full budget
    CHECK(r.rows.size() == 25);
    CHECK(r.all_satisfied);
    double prev = r.noisy_norm;
    for (const auto& row : r.rows) {
        CHECK(row.residual_norm <= prev + 1e-12);
        prev = row.residual_norm;
    }
}

TEST_CASE("experiment validates the weakness margin") {
    const Dictionary dict = make_orthonormal_dictionary(4, 4);
    CHECK_THROWS_AS(stability_experiment(dict, 1.0, 2, 0.2, 1.0, default_run(), 0),
                    ConfigError);
    CHECK_THROWS_AS(stability_experiment(dict, 1.0, 2, 0.2, 0.0, default_run(), 0),
                    ConfigError);
    CHECK_THROWS_AS(stability_experiment(dict, 1.0, 2, 1.5, 0.9, default_run(), 0),
                    ConfigError);
}

TEST_CASE("csv report shape") {
    const Dictionary dict = make_orthonormal_dictionary(8, 8);
    const StabilityReport r =
        stability_experiment(dict, 1.0, 3, 0.5, 0.9, default_run(), 11);
    const std::string csv = stability_to_csv(r);
    REQUIRE(csv.rfind("m,residual,bound,B_m,delta_norm,ok\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : csv) lines += (c == '\n');
    CHECK(lines == r.rows.size() + 1);
    // first data row starts with "1,"
    const std::size_t body = csv.find('\n') + 1;
    CHECK(csv.compare(body, 2, "1,") == 0);
}

TEST_CASE("json report parses and carries the verdict") {
    const Dictionary dict = make_orthonormal_dictionary(8, 8);
    const StabilityReport r =
        stability_experiment(dict, 1.0, 3, 0.5, 0.9, default_run(), 11);
    const std::string text = stability_to_json(r);
    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["all_satisfied"].get<bool>() == r.all_satisfied);
    CHECK(j["rows"].size() == r.rows.size());
    CHECK(j["config"]["epsilon"].get<double>() == 0.5);
    CHECK(j["config"]["dim"].get<std::size_t>() == 8);
    CHECK(j["summary"]["window_hi"].get<std::size_t>() == r.summary.window_hi);
    CHECK(j["companion_clean_norms"].size() == r.companion_clean_norms.size());
    CHECK(j["direct_clean_norms"].size() == r.direct_clean_norms.size());
    CHECK(j["direct_clean_bounds"].size() == r.direct_clean_bounds.size());
}

TEST_CASE("identical seeds give byte-identical reports") {
    const Dictionary dict = make_random_unit_dictionary(12, 48, 5);
    const StabilityReport a =
        stability_experiment(dict, 1.0, 6, 0.2, 0.9, default_run(), 100);
    const StabilityReport b =
        stability_experiment(dict, 1.0, 6, 0.2, 0.9, default_run(), 100);
    CHECK(stability_to_csv(a) == stability_to_csv(b));
    CHECK(stability_to_json(a) == stability_to_json(b));

    const StabilityReport c =
        stability_experiment(dict, 1.0, 6, 0.2, 0.9, default_run(), 101);
    CHECK(stability_to_csv(a) != stability_to_csv(c));
}

TEST_CASE("diagnostic dominates the clean-side selection mass in regime") {
    // within m <= eps^-2 the running total B_m = (B+1) + b sum y_j stays above
    // B + b sum |<companion_{j-1}, atom_j>|: the noisy inner products can lag
    // the clean ones by at most the difference sequence, whose accumulated
    // l1 mass is under 1/b in that range
    const double B = 1.0;
    const double eps = 0.1;
    const Dictionary dict = make_random_unit_dictionary(16, 64, 33);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Rng rng(seed);
        auto [f_clean, cert] = gen_a1_signal(dict, B, 8, rng.split());
        const Vector noisy = add_noise(f_clean, eps, NoiseMode::Exact, rng.split());
        const Vector noise = sub(noisy, f_clean);

        GreedyConfig config;
        config.b = (seed % 2 == 0) ? 1.0 : 0.6;
        config.max_iter = max_regime_iterations(eps);
        config.residual_atol = 0.0;
        const PairedTrace pt = run_paired(f_clean, noise, dict, config);

        double b_diag = B + 1.0;
        double clean_mass = B;
        for (std::size_t j = 0; j < pt.noisy.records.size(); ++j) {
            b_diag += config.b * pt.noisy.records[j].y;
            clean_mass += config.b * std::abs(pt.clean_inners[j]);
            CHECK(clean_mass <= b_diag + 1e-9);
        }
    }
}
