#include "greedy/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdint>
#include <exception>
#include <ostream>
#include <thread>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "greedy/bounds.hpp"
#include "greedy/demos.hpp"
#include "greedy/dictionary.hpp"
#include "greedy/errors.hpp"
#include "greedy/io.hpp"
#include "greedy/log.hpp"
#include "greedy/oga.hpp"
#include "greedy/rng.hpp"
#include "greedy/schedule.hpp"
#include "greedy/signals.hpp"
#include "greedy/stability.hpp"
#include "greedy/trace.hpp"
#include "greedy/wga.hpp"

namespace greedy {
namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kConfig = 2;
constexpr int kIo = 3;
constexpr int kNumerical = 4;

std::size_t parse_size(const std::string& s, const std::string& what) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ConfigError(what + ": '" + s + "' is not a nonnegative integer");
    }
    return v;
}

WeakSchedule make_schedule(double t, const std::string& tau_path) {
    if (!tau_path.empty()) {
        return WeakSchedule::from_values(load_values_file(tau_path));
    }
    return WeakSchedule::constant(t);
}

// --gen orthonormal:N | random:N:DIM (N atoms)
Dictionary generated_dictionary(const std::string& spec, std::uint64_t seed) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts[0] == "orthonormal" && parts.size() == 2) {
        const std::size_t n = parse_size(parts[1], "--gen orthonormal size");
        return make_orthonormal_dictionary(n, n);
    }
    if (parts[0] == "random" && parts.size() == 3) {
        const std::size_t count = parse_size(parts[1], "--gen random atom count");
        const std::size_t dim = parse_size(parts[2], "--gen random dimension");
        return make_random_unit_dictionary(dim, count, seed);
    }
    throw ConfigError("cannot parse --gen '" + spec +
                      "' (expected orthonormal:N or random:N:DIM)");
}

struct RunArgs {
    std::string algo;
    std::string dict_path;
    std::string signal_path;
    std::string tau_path;
    std::string policy = "max";
    std::string out_path;
    std::string format = "csv";
    double b = 1.0;
    double t = 1.0;
    double atol = 1e-12;
    std::size_t max_iter = 1000;
};

int cmd_run(const RunArgs& a, std::ostream& err) {
    const Dictionary dict = load_dictionary_file(a.dict_path);
    const Vector signal = load_signal_file(a.signal_path);

    GreedyConfig config;
    config.b = a.b;
    config.schedule = make_schedule(a.t, a.tau_path);
    config.policy = parse_policy(a.policy);
    config.max_iter = a.max_iter;
    config.residual_atol = a.atol;
    config.validate();

    const Trace trace = (a.algo == "oga") ? run_oga(signal, dict, config)
                                          : run_wga(signal, dict, config);
    write_file(a.out_path, a.format == "json" ? trace_to_json(trace)
                                              : trace_to_csv(trace));
    if (trace.termination == Termination::DependentAtom) {
        err << "error: selected atom is numerically dependent on the current "
               "basis; trace written up to the failing iteration\n";
        return kNumerical;
    }
    return kOk;
}

struct BoundsArgs {
    std::string which;
    std::string tau_path;
    std::string v_file;
    std::string out_path;
    double t = 1.0;
    double b = 1.0;
    double eps = 0.1;
    double B = 1.0;
    double h = 0.9;
    double f_norm = -1.0; // sentinel: default to B + eps
    double C = 1.0;
    double v_const = -1.0; // sentinel: require --v-const or --v-file for hl1
    std::size_t m_max = 0;
};

int cmd_bounds(const BoundsArgs& a, std::ostream&) {
    if (a.m_max < 1) {
        throw ConfigError("--m-max must be at least 1");
    }
    std::string csv = "m,value\n";
    auto emit = [&csv](std::size_t m, double value) {
        csv += std::to_string(m);
        csv += ',';
        csv += fmt_g17(value);
        csv += '\n';
    };

    if (a.which == "clean") {
        const WeakSchedule schedule = make_schedule(a.t, a.tau_path);
        for (std::size_t m = 0; m <= a.m_max; ++m) {
            emit(m, e_m_clean(schedule, a.b, m));
        }
    } else if (a.which == "noisy") {
        NoisyBoundParams params;
        params.epsilon = a.eps;
        params.B = a.B;
        params.h = a.h;
        params.b = a.b;
        params.schedule = make_schedule(a.t, a.tau_path);
        params.f_norm = (a.f_norm < 0.0) ? a.B + a.eps : a.f_norm;
        for (std::size_t m = 1; m <= a.m_max; ++m) {
            emit(m, noisy_bound(params, m));
        }
    } else if (a.which == "noisy-const") {
        for (std::size_t m = 1; m <= a.m_max; ++m) {
            emit(m, noisy_bound_const(a.t, a.b, a.h, a.eps, a.B, m));
        }
    } else if (a.which == "oga-noisy") {
        for (std::size_t m = 0; m <= a.m_max; ++m) {
            emit(m, oga_noisy_bound(a.eps, a.B, m));
        }
    } else if (a.which == "oga-clean") {
        for (std::size_t m = 1; m <= a.m_max; ++m) {
            emit(m, oga_clean_bound(m));
        }
    } else if (a.which == "hl1") {
        std::vector<double> v;
        if (!a.v_file.empty()) {
            v = load_values_file(a.v_file);
        } else if (a.v_const >= 0.0) {
            v.assign(a.m_max, a.v_const);
        } else {
            throw ConfigError("--which hl1 needs --v-const or --v-file");
        }
        for (std::size_t m = 0; m <= a.m_max; ++m) {
            emit(m, hl1_bound(a.C, v, m));
        }
    } else {
        throw ConfigError("unknown bound '" + a.which + "'");
    }
    write_file(a.out_path, csv);
    return kOk;
}

struct StabilityArgs {
    std::string dict_path;
    std::string gen_spec;
    std::string out_path;
    std::string format = "csv";
    double B = 1.0;
    double eps = 0.1;
    double h = 0.9;
    double t = 1.0;
    double b = 1.0;
    std::size_t sparsity = 8;
    std::size_t trials = 1;
    std::size_t jobs = 1;
    std::uint64_t seed = 0;
};

int cmd_stability(const StabilityArgs& a, std::ostream& err) {
    if (a.dict_path.empty() == a.gen_spec.empty()) {
        throw ConfigError("exactly one of --dict and --gen is required");
    }
    if (a.trials < 1) {
        throw ConfigError("--trials must be at least 1");
    }
    if (a.jobs < 1) {
        throw ConfigError("--jobs must be at least 1");
    }

    GreedyConfig config;
    config.b = a.b;
    config.schedule = WeakSchedule::constant(a.t);
    config.max_iter = max_regime_iterations(a.eps);
    config.residual_atol = 0.0;
    config.validate();

    // shared when loaded from file, regenerated per trial seed otherwise
    const bool from_file = !a.dict_path.empty();
    Dictionary file_dict = from_file ? load_dictionary_file(a.dict_path)
                                     : make_orthonormal_dictionary(1, 1);

    std::vector<StabilityReport> reports(a.trials);
    std::vector<std::exception_ptr> failures(a.trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= a.trials) return;
            try {
                const std::uint64_t trial_seed = a.seed + i;
                if (from_file) {
                    reports[i] = stability_experiment(file_dict, a.B, a.sparsity,
                                                      a.eps, a.h, config, trial_seed);
                } else {
                    const Dictionary dict = generated_dictionary(a.gen_spec, trial_seed);
                    reports[i] = stability_experiment(dict, a.B, a.sparsity, a.eps,
                                                      a.h, config, trial_seed);
                }
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    if (a.jobs == 1 || a.trials == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const std::size_t n = std::min(a.jobs, a.trials);
        pool.reserve(n);
        for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (const auto& failure : failures) {
        if (failure) std::rethrow_exception(failure);
    }

    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.all_satisfied;

    std::string content;
    if (a.trials == 1) {
        content = (a.format == "json") ? stability_to_json(reports[0])
                                       : stability_to_csv(reports[0]);
    } else if (a.format == "json") {
        nlohmann::ordered_json j;
        j["all_satisfied"] = all_ok;
        auto& items = j["trials"] = nlohmann::ordered_json::array();
        for (const auto& r : reports) {
            items.push_back(nlohmann::ordered_json::parse(stability_to_json(r)));
        }
        content = j.dump(2) + "\n";
    } else {
        content = "trial,m,residual,bound,B_m,delta_norm,ok\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const std::string one = stability_to_csv(reports[i]);
            const std::size_t body = one.find('\n') + 1;
            std::size_t pos = body;
            while (pos < one.size()) {
                const std::size_t eol = one.find('\n', pos);
                content += std::to_string(i);
                content += ',';
                content.append(one, pos, eol - pos + 1);
                pos = eol + 1;
            }
        }
    }
    write_file(a.out_path, content);

    if (!all_ok) {
        err << "stability bound violated; see " << a.out_path << "\n";
        return kViolation;
    }
    return kOk;
}

struct DemoLinearArgs {
    std::size_t k = 0;
    std::size_t dim = 0;
    std::uint64_t seed = 0;
    double eps = 0.1;
};

int cmd_demo_instability(double eps, std::ostream& out) {
    const InstabilityReport r = instability_demo(eps);
    out << "d1 = " << fmt_g17(r.d1) << "\n";
    out << "d2 = " << fmt_g17(r.d2) << "\n";
    out << "ratio = " << fmt_g17(r.ratio) << "\n";
    return kOk;
}

int cmd_demo_linear(const DemoLinearArgs& a, std::ostream& out) {
    if (a.dim < 1) {
        throw ConfigError("--dim must be at least 1");
    }
    Rng rng(a.seed);
    Vector f(std::vector<double>(a.dim, 0.0));
    for (std::size_t i = 0; i < a.dim; ++i) f[i] = rng.normal();
    const Vector f_eps = add_noise(f, a.eps, NoiseMode::Exact, rng.split());
    const LinearBaselineReport r = linear_baseline_demo(1.0, a.k, f, f_eps);
    out << "projected_diff = " << fmt_g17(r.projected_diff) << "\n";
    out << "input_diff = " << fmt_g17(r.input_diff) << "\n";
    out << "K = " << fmt_g17(r.K) << "\n";
    out << "holds = " << (r.holds ? "yes" : "no") << "\n";
    if (!r.holds) {
        throw NumericalError("projection moved points further than the inputs");
    }
    return kOk;
}

struct GenDictArgs {
    std::string kind;
    std::string out_path;
    std::size_t dim = 0;
    std::size_t count = 0; // 0: dim for orthonormal, 4*dim otherwise
    std::uint64_t seed = 0;
};

int cmd_gen_dict(const GenDictArgs& a, std::ostream&) {
    if (a.dim < 1) {
        throw ConfigError("--dim must be at least 1");
    }
    const std::size_t count =
        a.count > 0 ? a.count : (a.kind == "orthonormal" ? a.dim : 4 * a.dim);
    Dictionary dict = [&] {
        if (a.kind == "orthonormal") return make_orthonormal_dictionary(a.dim, count);
        if (a.kind == "random-unit")
            return make_random_unit_dictionary(a.dim, count, a.seed);
        if (a.kind == "coherent")
            return make_coherent_dictionary(a.dim, count, a.seed);
        throw ConfigError("unknown dictionary kind '" + a.kind + "'");
    }();
    write_file(a.out_path, dictionary_to_csv(dict));
    return kOk;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"greedy sparse approximation over finite dictionaries"};
    app.name("greedy");
    app.require_subcommand(1);
    // --h is a real option below (weakness margin), so help must not claim -h.
    app.set_help_flag("--help", "print usage and exit");

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "run a greedy algorithm on a signal");
    run->add_option("--algo", run_args.algo, "algorithm")
        ->required()
        ->check(CLI::IsMember({"wga", "oga"}));
    run->add_option("--dict", run_args.dict_path, "dictionary file (csv or json)")
        ->required();
    run->add_option("--signal", run_args.signal_path, "signal file (one csv row)")
        ->required();
    run->add_option("--b", run_args.b, "relaxation parameter in (0,1]");
    CLI::Option* t_opt = run->add_option("--t", run_args.t, "constant weakness");
    run->add_option("--tau", run_args.tau_path, "weakness schedule file")
        ->excludes(t_opt);
    run->add_option("--policy", run_args.policy, "selection policy")
        ->check(CLI::IsMember({"max", "threshold-first"}));
    run->add_option("--max-iter", run_args.max_iter, "iteration cap");
    run->add_option("--atol", run_args.atol, "residual stopping threshold");
    run->add_option("--out", run_args.out_path, "trace output path")->required();
    run->add_option("--format", run_args.format, "trace format")
        ->check(CLI::IsMember({"csv", "json"}));

    BoundsArgs bounds_args;
    CLI::App* bounds = app.add_subcommand("bounds", "tabulate a residual bound");
    bounds->add_option("--which", bounds_args.which, "bound to tabulate")
        ->required()
        ->check(CLI::IsMember(
            {"clean", "noisy", "noisy-const", "oga-noisy", "oga-clean", "hl1"}));
    bounds->add_option("--m-max", bounds_args.m_max, "largest iteration")->required();
    bounds->add_option("--out", bounds_args.out_path, "csv output path")->required();
    bounds->add_option("--t", bounds_args.t, "constant weakness");
    bounds->add_option("--tau", bounds_args.tau_path, "weakness schedule file");
    bounds->add_option("--b", bounds_args.b, "relaxation parameter");
    bounds->add_option("--eps", bounds_args.eps, "noise level");
    bounds->add_option("--B", bounds_args.B, "hull scaling of the clean signal");
    bounds->add_option("--h", bounds_args.h, "weakness margin in (0,1)");
    bounds->add_option("--f-norm", bounds_args.f_norm,
                       "norm of the noisy input (default B + eps)");
    bounds->add_option("--C", bounds_args.C, "recursion start value");
    bounds->add_option("--v-const", bounds_args.v_const,
                       "constant recursion decrement");
    bounds->add_option("--v-file", bounds_args.v_file, "recursion decrement file");

    StabilityArgs stability_args;
    CLI::App* stability =
        app.add_subcommand("stability", "noisy-run bound verification experiment");
    CLI::Option* dict_opt =
        stability->add_option("--dict", stability_args.dict_path, "dictionary file");
    stability
        ->add_option("--gen", stability_args.gen_spec,
                     "generate dictionary: orthonormal:N or random:N:DIM")
        ->excludes(dict_opt);
    stability->add_option("--B", stability_args.B, "hull scaling");
    stability->add_option("--sparsity", stability_args.sparsity,
                          "atoms in the clean signal");
    stability->add_option("--eps", stability_args.eps, "noise level in (0,1]");
    stability->add_option("--h", stability_args.h, "weakness margin in (0,1)");
    stability->add_option("--t", stability_args.t, "constant weakness");
    stability->add_option("--b", stability_args.b, "relaxation parameter");
    stability->add_option("--seed", stability_args.seed, "base seed");
    stability->add_option("--trials", stability_args.trials, "independent trials");
    stability->add_option("--jobs", stability_args.jobs, "worker threads");
    stability->add_option("--out", stability_args.out_path, "report output path")
        ->required();
    stability->add_option("--format", stability_args.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* demo = app.add_subcommand("demo", "small illustrative computations");
    demo->require_subcommand(1);
    double demo_eps = 0.0;
    CLI::App* instability =
        demo->add_subcommand("instability", "one greedy step on two close inputs");
    instability->add_option("--eps", demo_eps, "input perturbation")->required();
    DemoLinearArgs linear_args;
    CLI::App* linear =
        demo->add_subcommand("linear", "coordinate-projection contrast case");
    linear->add_option("--k", linear_args.k, "projection size")->required();
    linear->add_option("--dim", linear_args.dim, "signal dimension")->required();
    linear->add_option("--seed", linear_args.seed, "seed");
    linear->add_option("--eps", linear_args.eps, "noise level");

    GenDictArgs gen_args;
    CLI::App* gen_dict = app.add_subcommand("gen-dict", "write a dictionary csv");
    gen_dict->add_option("--kind", gen_args.kind, "dictionary family")
        ->required()
        ->check(CLI::IsMember({"orthonormal", "random-unit", "coherent"}));
    gen_dict->add_option("--dim", gen_args.dim, "dimension")->required();
    gen_dict->add_option("--count", gen_args.count, "atom count");
    gen_dict->add_option("--seed", gen_args.seed, "seed");
    gen_dict->add_option("--out", gen_args.out_path, "output path")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfig;
    }

    try {
        if (run->parsed()) return cmd_run(run_args, err);
        if (bounds->parsed()) return cmd_bounds(bounds_args, err);
        if (stability->parsed()) return cmd_stability(stability_args, err);
        if (demo->parsed()) {
            if (instability->parsed()) return cmd_demo_instability(demo_eps, out);
            return cmd_demo_linear(linear_args, out);
        }
        if (gen_dict->parsed()) return cmd_gen_dict(gen_args, err);
        err << "error: no subcommand\n";
        return kConfig;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kConfig;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << "\n";
        return kNumerical;
    }
}

} // namespace greedy
