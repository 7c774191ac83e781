#include "greedy/stability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <json.hpp>

#include "greedy/bounds.hpp"
#include "greedy/errors.hpp"
#include "greedy/io.hpp"
#include "greedy/log.hpp"
#include "greedy/rng.hpp"
#include "greedy/signals.hpp"
#include "greedy/wga.hpp"

namespace greedy {

StabilityReport stability_experiment(const Dictionary& dict, double B,
                                     std::size_t sparsity, double epsilon, double h,
                                     const GreedyConfig& config, std::uint64_t seed) {
    config.validate();
    if (!(h > 0.0 && h < 1.0)) {
        throw ConfigError("h must lie in (0,1), got " + std::to_string(h));
    }
    const std::size_t cap = max_regime_iterations(epsilon);

    Rng root(seed);
    const std::uint64_t signal_seed = root.split();
    const std::uint64_t noise_seed = root.split();

    auto [f_clean, cert] = gen_a1_signal(dict, B, sparsity, signal_seed);
    Vector f = add_noise(f_clean, epsilon, NoiseMode::Exact, noise_seed);
    Vector noise = sub(f, f_clean);

    GreedyConfig run_cfg = config;
    run_cfg.max_iter = std::min(config.max_iter, cap);
    run_cfg.residual_atol = 0.0; // every m up to the cap gets a row

    StabilityReport report;
    report.config.dict_label = dict.label();
    report.config.dim = dict.dim();
    report.config.atom_count = dict.size();
    report.config.B = B;
    report.config.sparsity = sparsity;
    report.config.epsilon = epsilon;
    report.config.h = h;
    report.config.b = config.b;
    report.config.schedule = config.schedule.values();
    report.config.policy = to_string(config.policy);
    report.config.seed = seed;
    report.config.iterations = run_cfg.max_iter;

    report.clean_norm = norm(f_clean);
    report.noise_norm = norm(noise);
    report.noisy_norm = norm(f);

    PairedTrace paired = run_paired(f_clean, noise, dict, run_cfg);
    report.companion_clean_norms = paired.clean_residual_norms;

    NoisyBoundParams params;
    params.epsilon = epsilon;
    params.B = B;
    params.h = h;
    params.f_norm = report.noisy_norm;
    params.b = config.b;
    params.schedule = config.schedule;

    double b_diag = B + 1.0;
    report.summary.window_lo = static_cast<std::size_t>(
        std::ceil(1.0 / (4.0 * epsilon * epsilon) - 1e-9));
    if (report.summary.window_lo == 0) report.summary.window_lo = 1;
    report.summary.window_hi = cap;
    report.summary.max_violation = -std::numeric_limits<double>::infinity();

    for (std::size_t m = 1; m <= paired.noisy.records.size(); ++m) {
        const IterationRecord& rec = paired.noisy.records[m - 1];
        b_diag += config.b * rec.y;
        StabilityRow row;
        row.m = m;
        row.residual_norm = rec.residual_norm;
        row.bound_value = noisy_bound(params, m);
        row.b_diag = b_diag;
        row.delta_norm = paired.delta_norms[m];
        row.bound_satisfied = row.residual_norm <= row.bound_value + 1e-9;
        if (!row.bound_satisfied) {
            report.all_satisfied = false;
            log_info("bound violated at m=" + std::to_string(m) + ": residual " +
                     fmt_g17(row.residual_norm) + " > bound " +
                     fmt_g17(row.bound_value));
        }
        report.summary.max_violation =
            std::max(report.summary.max_violation, row.residual_norm - row.bound_value);
        if (m >= report.summary.window_lo && m <= report.summary.window_hi) {
            report.summary.window_max_residual =
                std::max(report.summary.window_max_residual, row.residual_norm);
        }
        report.rows.push_back(row);
    }

    const double beta_end =
        beta_k(config.b, h, config.schedule.at(report.summary.window_hi));
    report.summary.rate_exponent = beta_end / (1.0 + beta_end);
    report.summary.rate_scale = std::pow(epsilon, report.summary.rate_exponent);
    report.summary.rate_ratio =
        (report.summary.rate_scale > 0.0)
            ? report.summary.window_max_residual / report.summary.rate_scale
            : 0.0;

    Trace direct = run_wga(f_clean, dict, run_cfg);
    report.direct_clean_norms.push_back(direct.initial_norm);
    report.direct_clean_bounds.push_back(B * e_m_clean(config.schedule, config.b, 0));
    for (std::size_t m = 1; m <= direct.records.size(); ++m) {
        report.direct_clean_norms.push_back(direct.records[m - 1].residual_norm);
        report.direct_clean_bounds.push_back(
            B * e_m_clean(config.schedule, config.b, m));
    }
    return report;
}

std::string stability_to_csv(const StabilityReport& report) {
    std::string out = "m,residual,bound,B_m,delta_norm,ok\n";
    for (const auto& row : report.rows) {
        out += std::to_string(row.m);
        out += ',';
        out += fmt_g17(row.residual_norm);
        out += ',';
        out += fmt_g17(row.bound_value);
        out += ',';
        out += fmt_g17(row.b_diag);
        out += ',';
        out += fmt_g17(row.delta_norm);
        out += ',';
        out += row.bound_satisfied ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string stability_to_json(const StabilityReport& report) {
    nlohmann::ordered_json j;
    auto& cfg = j["config"];
    cfg["dictionary"] = report.config.dict_label;
    cfg["dim"] = report.config.dim;
    cfg["atom_count"] = report.config.atom_count;
    cfg["B"] = report.config.B;
    cfg["sparsity"] = report.config.sparsity;
    cfg["epsilon"] = report.config.epsilon;
    cfg["h"] = report.config.h;
    cfg["b"] = report.config.b;
    cfg["schedule"] = report.config.schedule;
    cfg["policy"] = report.config.policy;
    cfg["seed"] = report.config.seed;
    cfg["iterations"] = report.config.iterations;

    j["all_satisfied"] = report.all_satisfied;
    j["noisy_norm"] = report.noisy_norm;
    j["clean_norm"] = report.clean_norm;
    j["noise_norm"] = report.noise_norm;

    auto& rows = j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json r;
        r["m"] = row.m;
        r["residual"] = row.residual_norm;
        r["bound"] = row.bound_value;
        r["B_m"] = row.b_diag;
        r["delta_norm"] = row.delta_norm;
        r["ok"] = row.bound_satisfied;
        rows.push_back(std::move(r));
    }

    auto& s = j["summary"];
    s["max_violation"] = report.summary.max_violation;
    s["window_lo"] = report.summary.window_lo;
    s["window_hi"] = report.summary.window_hi;
    s["window_max_residual"] = report.summary.window_max_residual;
    s["rate_exponent"] = report.summary.rate_exponent;
    s["rate_scale"] = report.summary.rate_scale;
    s["rate_ratio"] = report.summary.rate_ratio;

    j["companion_clean_norms"] = report.companion_clean_norms;
    j["direct_clean_norms"] = report.direct_clean_norms;
    j["direct_clean_bounds"] = report.direct_clean_bounds;
    return j.dump(2) + "\n";
}

} // namespace greedy
