#pragma once

#include <Eigen/Core>
#include <Eigen/QR>
#include <optional>
#include <utility>

#include "sandwich/dataset.hpp"

namespace sandwich {

/// Least-squares fit: coefficients, residuals, and the cached design
/// cross-products the covariance estimators need. Immutable value type.
struct FitResult {
    Eigen::VectorXd beta;
    Eigen::VectorXd residuals;
    Eigen::MatrixXd xtx_inverse;
    Eigen::MatrixXd x;          ///< design copy, for sandwich meat terms
    Eigen::VectorXd leverage;   ///< hat-matrix diagonal from the thin Q factor
    Index n = 0;
    Index p = 0;
    std::optional<Index> m;
    std::optional<Index> binary_column;
};

/// Householder QR of a fixed design, reusable across many outcomes.
///
/// Factoring once and solving per-y is what the Monte Carlo and bootstrap
/// loops lean on; (X'X)^-1 and the leverages are recovered from the
/// factorization rather than from explicit normal equations.
class OlsSolver {
public:
    /// Throws CollinearError when the design is rank deficient
    /// (pivot tolerance 1e-10 relative to the largest pivot).
    explicit OlsSolver(Eigen::MatrixXd x);

    FitResult fit(const Eigen::VectorXd& y, std::optional<Index> binary_column = std::nullopt,
                  std::optional<Index> m = std::nullopt) const;

    const Eigen::MatrixXd& xtx_inverse() const { return xtx_inverse_; }
    const Eigen::VectorXd& leverage() const { return leverage_; }
    const Eigen::MatrixXd& design() const { return x_; }

private:
    Eigen::MatrixXd x_;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr_;
    Eigen::MatrixXd xtx_inverse_;
    Eigen::VectorXd leverage_;
};

/// Ordinary least squares via orthogonal factorization of the design.
FitResult ols_fit(const Dataset& d);

/// Arithmetic means of y over {X=0} and {X=1}; the method-of-moments
/// counterpart of ols_fit on a binary single-predictor design
/// (beta0 = mean0, beta1 = mean1 - mean0).
/// Throws MissingBinaryColumnError.
std::pair<double, double> group_means(const Dataset& d);

}  // namespace sandwich
