#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sandwich/covariance.hpp"
#include "sandwich/dgp.hpp"
#include "sandwich/kde.hpp"

namespace sandwich {

/// Sampling-distribution summary for one standard-error estimator.
struct EstimatorSummary {
    Estimator estimator = Estimator::HC0;
    double mean_se = 0.0;
    double sd_se = 0.0;              ///< NaN when replicates == 1
    double coverage = 0.0;           ///< nominal-95% CI coverage, critical value 1.96
    std::vector<double> se_samples;  ///< per-replicate SEs, replicate order
    std::optional<DensityCurve> density;
};

struct SimulationSummary {
    long replicates = 0;
    double true_se = 0.0;       ///< from the DgpSpec's analytic group variances
    double beta1_mean = 0.0;
    double beta1_sd = 0.0;
    std::vector<EstimatorSummary> estimators;
};

struct SimulationOptions {
    long replicates = 25000;
    std::vector<Estimator> estimators{Estimator::Classical, Estimator::HC0};
    std::uint64_t master_seed = 0;
    bool compute_kde = false;
    std::optional<double> kde_bandwidth;
    int workers = 1;
};

/// Replicated fit-and-estimate experiment over the two-group DGP.
///
/// Replicate k draws with stream id k, fits by least squares, and records
/// each requested standard error of the group-difference coefficient plus
/// whether |beta1_hat - beta1| <= 1.96 SE. The classical estimator uses the
/// uncorrected n divisor here so that its sampling distribution matches the
/// pooled-average-squared-residual form the asymptotic algebra describes.
/// Output is a deterministic function of (spec, options) and is independent
/// of the worker count.
SimulationSummary run_simulation(const DgpSpec& spec, const SimulationOptions& options);

}  // namespace sandwich
