#pragma once

#include <utility>
#include <vector>

#include "sandwich/dataset.hpp"
#include "sandwich/ols.hpp"
#include "sandwich/rng.hpp"

namespace sandwich {

/// Information-matrix specification test of the homoskedastic-normal linear
/// null, calibrated by parametric bootstrap.
///
/// The statistic decomposes into moment checks on standardized residuals:
/// a heteroskedasticity block (score form of the auxiliary regression of
/// squared standardized residuals on the distinct regressor cross products),
/// a skewness block n m3^2 / 6, and a kurtosis block n (m4 - 3)^2 / 24.
struct ImTestResult {
    double statistic = 0.0;
    double bootstrap_p = 1.0;  ///< (1 + #{bootstrap >= observed}) / (B + 1)
    int bootstrap_replicates = 0;
    struct Components {
        double heteroskedasticity = 0.0;
        double skewness = 0.0;
        double kurtosis = 0.0;
    } components;
};

/// Runs the IM test with B parametric-bootstrap replicates (B >= 99). Each
/// bootstrap draw simulates from the fitted homoskedastic-normal model on a
/// fresh substream of `stream`, so results are reproducible and independent
/// of the worker count.
/// Throws DegenerateSampleError when the residual spread is numerically zero.
ImTestResult im_test(const Dataset& d, int bootstrap_replicates, const RngStream& stream,
                     int workers = 1);

/// Normal Q-Q pairs: sorted residuals standardized by their sample standard
/// deviation, against standard normal quantiles at points (i - 0.5)/n.
struct QqData {
    std::vector<std::pair<double, double>> pairs;  ///< (theoretical, sample)
};

/// Requires n >= 3; throws DegenerateSampleError on zero residual spread.
QqData qq_normal(const FitResult& f);

/// Median of y over {X=1} minus median over {X=0}, midpoint convention for
/// even counts. The maximum-likelihood analogue of the group-difference
/// coefficient under known Laplace disturbances; not consistent when the
/// disturbance law is asymmetric.
double diff_in_medians(const Dataset& d);

}  // namespace sandwich
