// sandwich-lab: fit linear models with classical and robust standard errors,
// replicate the two-group heteroskedastic benchmark, print asymptotic limits,
// and run the bootstrap information-matrix test.

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sandwich/covariance.hpp"
#include "sandwich/csv.hpp"
#include "sandwich/dgp.hpp"
#include "sandwich/diagnostics.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/kde.hpp"
#include "sandwich/ols.hpp"
#include "sandwich/simulate.hpp"

namespace {

using nlohmann::json;
using namespace sandwich;

constexpr int kExitValidation = 2;
constexpr int kExitEstimation = 3;

std::string full_precision(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                         std::chars_format::general, 17);
    (void)ec;
    return std::string(buf, ptr);
}

uint64_t resolve_seed(const std::optional<uint64_t>& flag,
                      const std::optional<uint64_t>& config = std::nullopt) {
    if (flag) return *flag;
    if (config) return *config;
    if (const char* env = std::getenv("SANDWICH_LAB_SEED")) {
        uint64_t value = 0;
        const auto* end = env + std::string_view(env).size();
        const auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw ValidationError("SANDWICH_LAB_SEED is not an unsigned integer: \"" +
                                  std::string(env) + "\"");
        }
        return value;
    }
    return 0;
}

std::vector<Estimator> parse_robust_flags(const std::vector<std::string>& names) {
    std::vector<Estimator> variants{Estimator::HC0};
    for (const auto& name : names) {
        const auto est = parse_estimator(name);
        if (!est || *est == Estimator::Classical) {
            throw ValidationError("--robust expects one of hc0, hc1, hc2, hc3; got \"" + name +
                                  "\"");
        }
        if (std::find(variants.begin(), variants.end(), *est) == variants.end()) {
            variants.push_back(*est);
        }
    }
    return variants;
}

// ---------------------------------------------------------------------------
// fit

struct FitFlags {
    std::string csv_path;
    std::string binary_col;
    std::vector<std::string> robust;
    std::string classical_dof = "n-p";
    int imtest_b = 0;
    std::string qq_path;
    bool emit_json = false;
    bool no_intercept = false;
    std::optional<uint64_t> seed;
    int workers = 1;
};

int cmd_fit(const FitFlags& flags) {
    const CsvTable table = read_csv_file(flags.csv_path);
    const Dataset d = dataset_from_table(table, flags.binary_col, !flags.no_intercept);
    const std::vector<Estimator> variants = parse_robust_flags(flags.robust);

    if (flags.classical_dof != "n" && flags.classical_dof != "n-p") {
        throw ValidationError("--classical-dof expects n or n-p");
    }
    const bool dof_correct = flags.classical_dof == "n-p";

    const FitResult fit = ols_fit(d);
    const CovEstimate classical = classical_cov(fit, dof_correct);
    std::vector<CovEstimate> robust;
    robust.reserve(variants.size());
    for (const Estimator v : variants) robust.push_back(hc_cov(fit, v));

    std::optional<ImTestResult> im;
    if (flags.imtest_b > 0) {
        RngStream stream(resolve_seed(flags.seed), 0);
        im = im_test(d, flags.imtest_b, stream, flags.workers);
    }

    if (!flags.qq_path.empty()) {
        const QqData qq = qq_normal(fit);
        std::ofstream out(flags.qq_path);
        if (!out) {
            throw ValidationError("cannot open \"" + flags.qq_path + "\" for writing");
        }
        out << "theoretical,sample\n";
        for (const auto& [theoretical, samp] : qq.pairs) {
            out << full_precision(theoretical) << ',' << full_precision(samp) << '\n';
        }
    }

    if (flags.emit_json) {
        json report;
        report["dataset"] = {{"file", flags.csv_path},
                             {"n", fit.n},
                             {"p", fit.p}};
        if (d.m) {
            report["dataset"]["m"] = *d.m;
        } else {
            report["dataset"]["m"] = nullptr;
        }
        report["classical_dof"] = flags.classical_dof;
        report["coefficients"] = json::array();
        for (Index j = 0; j < fit.p; ++j) {
            json coef;
            coef["index"] = j;
            coef["estimate"] = fit.beta[j];
            coef["classical_se"] = classical.se(j);
            json se_obj = json::object();
            json ratio_obj = json::object();
            for (const auto& cov : robust) {
                const auto name = std::string(estimator_name(cov.estimator_tag));
                se_obj[name] = cov.se(j);
                ratio_obj[name] = divergence_ratio(cov.se(j), classical.se(j));
            }
            coef["robust_se"] = se_obj;
            coef["divergence_ratio"] = ratio_obj;
            report["coefficients"].push_back(coef);
        }
        if (im) {
            report["im_test"] = {
                {"statistic", im->statistic},
                {"bootstrap_p", im->bootstrap_p},
                {"bootstrap_replicates", im->bootstrap_replicates},
                {"components",
                 {{"heteroskedasticity", im->components.heteroskedasticity},
                  {"skewness", im->components.skewness},
                  {"kurtosis", im->components.kurtosis}}}};
        }
        if (!flags.qq_path.empty()) report["qq_path"] = flags.qq_path;
        std::cout << report.dump(2) << '\n';
        return 0;
    }

    std::cout << "dataset: " << flags.csv_path << "  n=" << fit.n << "  p=" << fit.p;
    if (d.m) std::cout << "  m=" << *d.m;
    std::cout << "\nclassical dof: " << flags.classical_dof << "\n\n";

    std::cout << std::left << std::setw(6) << "coef" << std::right << std::setw(16) << "estimate"
              << std::setw(16) << "classical_se";
    for (const auto& cov : robust) {
        std::cout << std::setw(16) << std::string(estimator_name(cov.estimator_tag)) + "_se";
    }
    for (const auto& cov : robust) {
        std::cout << std::setw(16) << "ratio_" + std::string(estimator_name(cov.estimator_tag));
    }
    std::cout << '\n';

    std::cout << std::setprecision(10);
    for (Index j = 0; j < fit.p; ++j) {
        std::cout << std::left << std::setw(6) << j << std::right << std::setw(16) << fit.beta[j]
                  << std::setw(16) << classical.se(j);
        for (const auto& cov : robust) std::cout << std::setw(16) << cov.se(j);
        for (const auto& cov : robust) {
            std::cout << std::setw(16) << divergence_ratio(cov.se(j), classical.se(j));
        }
        std::cout << '\n';
    }

    if (im) {
        std::cout << "\nim test: statistic=" << im->statistic << "  p=" << im->bootstrap_p
                  << "  B=" << im->bootstrap_replicates
                  << "\n  components: het=" << im->components.heteroskedasticity
                  << "  skew=" << im->components.skewness
                  << "  kurt=" << im->components.kurtosis << '\n';
    }
    if (!flags.qq_path.empty()) std::cout << "\nqq data written to " << flags.qq_path << '\n';
    return 0;
}

// ---------------------------------------------------------------------------
// simulate

struct SimulateFlags {
    std::string config_path;
    std::string out_summary;
    std::string out_density;
    std::optional<uint64_t> seed;
    int workers = 1;
};

DisturbanceSpec disturbance_from_json(const json& obj, const std::string& which) {
    DisturbanceSpec spec{Family::Laplace, 0.0, 1.0};
    if (obj.contains("family")) {
        const auto name = obj.at("family").get<std::string>();
        const auto family = parse_family(name);
        if (!family) {
            throw ValidationError("config: " + which + ".family \"" + name + "\" is unknown");
        }
        spec.family = *family;
    }
    if (obj.contains("location")) spec.location = obj.at("location").get<double>();
    if (obj.contains("scale")) spec.scale = obj.at("scale").get<double>();
    return spec;
}

int cmd_simulate(const SimulateFlags& flags) {
    DgpSpec spec;
    SimulationOptions options;
    options.workers = flags.workers;
    std::optional<uint64_t> config_seed;

    if (!flags.config_path.empty()) {
        std::ifstream in(flags.config_path);
        if (!in) {
            throw ValidationError("cannot open config \"" + flags.config_path + "\"");
        }
        json config;
        try {
            in >> config;
        } catch (const json::exception& e) {
            throw ValidationError("config: " + std::string(e.what()));
        }
        try {
            if (config.contains("n")) spec.n = config.at("n").get<Index>();
            if (config.contains("m")) spec.m = config.at("m").get<Index>();
            if (config.contains("beta0")) spec.beta0 = config.at("beta0").get<double>();
            if (config.contains("beta1")) spec.beta1 = config.at("beta1").get<double>();
            if (config.contains("dist0")) {
                spec.dist0 = disturbance_from_json(config.at("dist0"), "dist0");
            }
            if (config.contains("dist1")) {
                spec.dist1 = disturbance_from_json(config.at("dist1"), "dist1");
            }
            if (config.contains("replicates")) {
                options.replicates = config.at("replicates").get<long>();
            }
            if (config.contains("estimators")) {
                options.estimators.clear();
                for (const auto& item : config.at("estimators")) {
                    const auto name = item.get<std::string>();
                    const auto est = parse_estimator(name);
                    if (!est) {
                        throw ValidationError("config: unknown estimator \"" + name + "\"");
                    }
                    options.estimators.push_back(*est);
                }
            }
            if (config.contains("kde") && config.at("kde").contains("bandwidth")) {
                options.kde_bandwidth = config.at("kde").at("bandwidth").get<double>();
            }
            if (config.contains("seed")) config_seed = config.at("seed").get<uint64_t>();
        } catch (const json::exception& e) {
            throw ValidationError("config: " + std::string(e.what()));
        }
    }

    options.master_seed = resolve_seed(flags.seed, config_seed);
    options.compute_kde = !flags.out_density.empty();
    spec.validate();
    if (options.replicates < 1) throw ValidationError("config: replicates must be positive");
    if (options.estimators.empty()) {
        throw ValidationError("config: estimator list must not be empty");
    }

    const SimulationSummary summary = run_simulation(spec, options);
    const LimitPair limits = asymptotic_limits(spec.mu(), spec.dist0.variance(),
                                               spec.dist1.variance());
    const double root_n = std::sqrt(static_cast<double>(spec.n));

    std::cout << "simulate: n=" << spec.n << "  m=" << spec.m
              << "  replicates=" << summary.replicates << "  seed=" << options.master_seed
              << "\ntrue se: " << full_precision(summary.true_se)
              << "\nbeta1: mean=" << full_precision(summary.beta1_mean)
              << "  sd=" << full_precision(summary.beta1_sd) << '\n';
    for (const auto& est : summary.estimators) {
        std::cout << estimator_name(est.estimator) << ": mean_se="
                  << full_precision(est.mean_se);
        if (summary.replicates > 1) std::cout << "  sd_se=" << full_precision(est.sd_se);
        std::cout << "  coverage=" << full_precision(est.coverage) << '\n';
    }

    if (!flags.out_summary.empty()) {
        std::ofstream out(flags.out_summary);
        if (!out) {
            throw ValidationError("cannot open \"" + flags.out_summary + "\" for writing");
        }
        out << "estimator,replicates,mean_se,sd_se,coverage,true_se,limit_se\n";
        for (const auto& est : summary.estimators) {
            const double limit = est.estimator == Estimator::Classical ? limits.classical_limit
                                                                       : limits.robust_limit;
            out << estimator_name(est.estimator) << ',' << summary.replicates << ','
                << full_precision(est.mean_se) << ',';
            if (summary.replicates > 1) out << full_precision(est.sd_se);
            out << ',' << full_precision(est.coverage) << ','
                << full_precision(summary.true_se) << ',' << full_precision(limit / root_n)
                << '\n';
        }
        if (!out) throw ValidationError("write to \"" + flags.out_summary + "\" failed");
    }

    if (!flags.out_density.empty()) {
        std::ofstream out(flags.out_density);
        if (!out) {
            throw ValidationError("cannot open \"" + flags.out_density + "\" for writing");
        }
        out << "estimator,x,density,bandwidth\n";
        for (const auto& est : summary.estimators) {
            if (!est.density) continue;
            const auto& curve = *est.density;
            for (size_t i = 0; i < curve.grid.size(); ++i) {
                out << estimator_name(est.estimator) << ',' << full_precision(curve.grid[i])
                    << ',' << full_precision(curve.density[i]) << ','
                    << full_precision(curve.bandwidth) << '\n';
            }
        }
        if (!out) throw ValidationError("write to \"" + flags.out_density + "\" failed");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// limits

struct LimitsFlags {
    double mu = 0.0;
    double var0 = 2.0;
    double var1 = 8.0;
    std::optional<long> n;
};

int cmd_limits(const LimitsFlags& flags) {
    const LimitPair limits = asymptotic_limits(flags.mu, flags.var0, flags.var1);

    std::cout << "mu=" << flags.mu << "  var0=" << flags.var0 << "  var1=" << flags.var1 << '\n';
    std::cout << std::setprecision(10);
    const auto print_row = [&](const char* label, double limit) {
        std::cout << std::left << std::setw(16) << label << std::right << std::setw(16) << limit;
        if (flags.n) {
            const double scaled = limit / std::sqrt(static_cast<double>(*flags.n));
            std::cout << "    se at n=" << *flags.n << ": " << scaled;
        }
        std::cout << '\n';
    };
    print_row("robust", limits.robust_limit);
    print_row("classical", limits.classical_limit);
    print_row("true", limits.true_limit);
    return 0;
}

// ---------------------------------------------------------------------------
// imtest

struct ImtestFlags {
    std::string csv_path;
    std::string binary_col;
    bool no_intercept = false;
    int bootstrap_b = 999;
    std::optional<uint64_t> seed;
    int workers = 1;
};

int cmd_imtest(const ImtestFlags& flags) {
    const CsvTable table = read_csv_file(flags.csv_path);
    const Dataset d = dataset_from_table(table, flags.binary_col, !flags.no_intercept);

    RngStream stream(resolve_seed(flags.seed), 0);
    const ImTestResult result = im_test(d, flags.bootstrap_b, stream, flags.workers);

    std::cout << std::setprecision(10) << "im test: statistic=" << result.statistic
              << "  p=" << result.bootstrap_p << "  B=" << result.bootstrap_replicates
              << "\ncomponents: het=" << result.components.heteroskedasticity
              << "  skew=" << result.components.skewness
              << "  kurt=" << result.components.kurtosis << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regression standard-error diagnostics"};
    app.require_subcommand(1);

    FitFlags fit_flags;
    auto* fit = app.add_subcommand("fit", "least-squares fit with classical and robust SEs");
    fit->add_option("csv", fit_flags.csv_path, "input CSV: outcome first, then predictors")
        ->required();
    fit->add_option("--binary-col", fit_flags.binary_col,
                    "predictor holding the 0/1 group indicator (name or 0-based index)");
    fit->add_option("--robust", fit_flags.robust, "robust variants to report (hc0..hc3)");
    fit->add_option("--classical-dof", fit_flags.classical_dof,
                    "classical variance divisor: n or n-p (default n-p)");
    fit->add_option("--imtest", fit_flags.imtest_b,
                    "run the information-matrix test with this many bootstrap replicates");
    fit->add_option("--qq", fit_flags.qq_path, "write normal Q-Q pairs to this CSV");
    fit->add_flag("--json", fit_flags.emit_json, "emit a JSON report instead of the table");
    fit->add_flag("--no-intercept", fit_flags.no_intercept, "do not prepend a column of ones");
    fit->add_option("--seed", fit_flags.seed, "seed for the bootstrap (also SANDWICH_LAB_SEED)");
    fit->add_option("--workers", fit_flags.workers, "worker threads for the bootstrap");

    SimulateFlags sim_flags;
    auto* simulate = app.add_subcommand("simulate", "replicate the two-group benchmark");
    simulate->add_option("config", sim_flags.config_path, "JSON config (defaults when omitted)");
    simulate->add_option("--out-summary", sim_flags.out_summary, "summary CSV path");
    simulate->add_option("--out-density", sim_flags.out_density, "density CSV path");
    simulate->add_option("--seed", sim_flags.seed, "master seed (also SANDWICH_LAB_SEED)");
    simulate->add_option("--workers", sim_flags.workers, "worker threads");

    LimitsFlags limit_flags;
    auto* limits = app.add_subcommand("limits", "asymptotic sqrt(n)-scaled SE limits");
    limits->add_option("--mu", limit_flags.mu, "treated fraction, in (0, 1)")->required();
    limits->add_option("--var0", limit_flags.var0, "control disturbance variance");
    limits->add_option("--var1", limit_flags.var1, "treated disturbance variance");
    limits->add_option("--n", limit_flags.n, "also print limits scaled by 1/sqrt(n)");

    ImtestFlags im_flags;
    auto* imtest = app.add_subcommand("imtest", "bootstrap information-matrix test");
    imtest->add_option("csv", im_flags.csv_path, "input CSV: outcome first, then predictors")
        ->required();
    imtest->add_option("--binary-col", im_flags.binary_col,
                       "predictor holding the 0/1 group indicator");
    imtest->add_flag("--no-intercept", im_flags.no_intercept, "do not prepend a column of ones");
    imtest->add_option("--B", im_flags.bootstrap_b, "bootstrap replicates (default 999)");
    imtest->add_option("--seed", im_flags.seed, "seed (also SANDWICH_LAB_SEED)");
    imtest->add_option("--workers", im_flags.workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (fit->parsed()) return cmd_fit(fit_flags);
        if (simulate->parsed()) return cmd_simulate(sim_flags);
        if (limits->parsed()) return cmd_limits(limit_flags);
        if (imtest->parsed()) return cmd_imtest(im_flags);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const EstimationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitEstimation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
