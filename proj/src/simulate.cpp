#include "sandwich/simulate.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sandwich/errors.hpp"
#include "sandwich/ols.hpp"
#include "sandwich/parallel.hpp"
#include "sandwich/stats.hpp"

namespace sandwich {

namespace {

constexpr double kCriticalValue = 1.96;

Eigen::MatrixXd design_for(const DgpSpec& spec) {
    Eigen::MatrixXd x(spec.n, 2);
    x.col(0).setOnes();
    x.col(1).setZero();
    x.col(1).head(spec.m).setOnes();
    return x;
}

}  // namespace

SimulationSummary run_simulation(const DgpSpec& spec, const SimulationOptions& options) {
    spec.validate();
    if (options.replicates < 1) {
        throw ValidationError("run_simulation: need at least one replicate");
    }
    if (options.estimators.empty()) {
        throw ValidationError("run_simulation: no estimators requested");
    }

    const long reps = options.replicates;
    const std::size_t n_est = options.estimators.size();

    // X is fixed by design across replicates, so factor it once.
    const OlsSolver solver(design_for(spec));

    std::vector<double> beta1(static_cast<std::size_t>(reps));
    std::vector<std::vector<double>> ses(n_est,
                                         std::vector<double>(static_cast<std::size_t>(reps)));

    parallel_for(reps, options.workers, [&](std::int64_t k) {
        try {
            RngStream stream = derive_stream(options.master_seed, static_cast<std::uint64_t>(k));
            const std::vector<double> treated =
                sample(spec.dist1, stream, static_cast<std::size_t>(spec.m));
            const std::vector<double> control =
                sample(spec.dist0, stream, static_cast<std::size_t>(spec.n - spec.m));

            Eigen::VectorXd y(spec.n);
            for (Index i = 0; i < spec.m; ++i) {
                y(i) = spec.beta0 + spec.beta1 + treated[static_cast<std::size_t>(i)];
            }
            for (Index i = spec.m; i < spec.n; ++i) {
                y(i) = spec.beta0 + control[static_cast<std::size_t>(i - spec.m)];
            }

            const FitResult fit = solver.fit(y, 1, spec.m);
            beta1[static_cast<std::size_t>(k)] = fit.beta(1);
            for (std::size_t e = 0; e < n_est; ++e) {
                const Estimator kind = options.estimators[e];
                const CovEstimate cov = (kind == Estimator::Classical)
                                            ? classical_cov(fit, /*dof_correct=*/false)
                                            : hc_cov(fit, kind);
                ses[e][static_cast<std::size_t>(k)] = cov.se(1);
            }
        } catch (const Error& err) {
            throw Error("replicate " + std::to_string(k) + ": " + err.what());
        }
    });

    SimulationSummary summary;
    summary.replicates = reps;
    summary.true_se =
        binary_true_se(spec.dist0.variance(), spec.dist1.variance(), spec.m, spec.n);
    summary.beta1_mean = mean(beta1);
    summary.beta1_sd = sample_sd(beta1);

    for (std::size_t e = 0; e < n_est; ++e) {
        EstimatorSummary es;
        es.estimator = options.estimators[e];
        es.mean_se = mean(ses[e]);
        es.sd_se = (reps > 1) ? sample_sd(ses[e]) : std::numeric_limits<double>::quiet_NaN();
        long covered = 0;
        for (std::size_t k = 0; k < static_cast<std::size_t>(reps); ++k) {
            if (std::abs(beta1[k] - spec.beta1) <= kCriticalValue * ses[e][k]) ++covered;
        }
        es.coverage = static_cast<double>(covered) / static_cast<double>(reps);
        if (options.compute_kde) {
            es.density = kde(ses[e], options.kde_bandwidth);
        }
        es.se_samples = std::move(ses[e]);
        summary.estimators.push_back(std::move(es));
    }
    return summary;
}

}  // namespace sandwich
