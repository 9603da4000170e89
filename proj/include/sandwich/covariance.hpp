#pragma once

#include <Eigen/Core>
#include <cmath>
#include <optional>
#include <string_view>

#include "sandwich/ols.hpp"

namespace sandwich {

enum class Estimator { Classical, HC0, HC1, HC2, HC3 };

std::string_view estimator_name(Estimator e);
std::optional<Estimator> parse_estimator(std::string_view name);

/// Coefficient covariance matrix tagged with the estimator that produced it.
struct CovEstimate {
    Eigen::MatrixXd matrix;
    Estimator estimator_tag = Estimator::Classical;
    Index dof_used = 0;

    double se(Index j) const { return std::sqrt(matrix(j, j)); }
};

/// Classical (homoskedasticity-motivated) covariance: s^2 (X'X)^-1 with
/// s^2 the average squared residual, divisor n, or n-p when dof_correct.
CovEstimate classical_cov(const FitResult& f, bool dof_correct = false);

/// Heteroskedasticity-robust sandwich covariance
///   (X'X)^-1 (sum_i w_i e_i^2 x_i x_i') (X'X)^-1
/// with w_i = 1 (HC0), n/(n-p) (HC1), 1/(1-h_i) (HC2), 1/(1-h_i)^2 (HC3).
/// HC0 carries no finite-sample correction and is the variant whose binary
/// closed form the rest of the toolkit pins against.
/// Throws LeverageOneError when HC2/HC3 meet a leverage of one.
CovEstimate hc_cov(const FitResult& f, Estimator variant = Estimator::HC0);

/// Exact standard error of the group-difference coefficient when the
/// per-group average disturbance variances are known:
/// sqrt(var0/(n-m) + var1/m). Throws BadGroupSizesError unless 0 < m < n.
double binary_true_se(double var0, double var1, long m, long n);

/// Limits of sqrt(n * V-hat) for the two-group design as m/n -> mu.
/// The robust estimator converges to the true value; the classical one
/// converges to the pooled-variance expression, which agrees only under
/// homoskedasticity or mu = 1/2.
struct LimitPair {
    double robust_limit;
    double classical_limit;
    double true_limit;
};

/// Throws BadMuError unless mu lies strictly inside (0, 1);
/// requires var0, var1 > 0.
LimitPair asymptotic_limits(double mu, double var0 = 2.0, double var1 = 8.0);

/// robust_se / classical_se. Throws DivideByZeroError when classical_se == 0.
double divergence_ratio(double robust_se, double classical_se);

}  // namespace sandwich
