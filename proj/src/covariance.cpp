#include "sandwich/covariance.hpp"

#include <string>

#include "sandwich/errors.hpp"

namespace sandwich {

namespace {

constexpr double kLeverageCeiling = 1.0 - 1e-12;

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) {
    return 0.5 * (m + m.transpose());
}

}  // namespace

std::string_view estimator_name(Estimator e) {
    switch (e) {
        case Estimator::Classical: return "classical";
        case Estimator::HC0: return "hc0";
        case Estimator::HC1: return "hc1";
        case Estimator::HC2: return "hc2";
        case Estimator::HC3: return "hc3";
    }
    return "unknown";
}

std::optional<Estimator> parse_estimator(std::string_view name) {
    if (name == "classical") return Estimator::Classical;
    if (name == "hc0") return Estimator::HC0;
    if (name == "hc1") return Estimator::HC1;
    if (name == "hc2") return Estimator::HC2;
    if (name == "hc3") return Estimator::HC3;
    return std::nullopt;
}

CovEstimate classical_cov(const FitResult& f, bool dof_correct) {
    const Index dof = dof_correct ? f.n - f.p : f.n;
    const double s2 = f.residuals.squaredNorm() / static_cast<double>(dof);
    CovEstimate c;
    c.matrix = symmetrize(s2 * f.xtx_inverse);
    c.estimator_tag = Estimator::Classical;
    c.dof_used = dof;
    return c;
}

CovEstimate hc_cov(const FitResult& f, Estimator variant) {
    if (variant == Estimator::Classical) {
        throw ValidationError("hc_cov: requested the classical estimator; use classical_cov");
    }
    const Index n = f.n;
    const Index p = f.p;

    Eigen::VectorXd w = Eigen::VectorXd::Ones(n);
    Index dof = n;
    switch (variant) {
        case Estimator::HC0:
            break;
        case Estimator::HC1:
            w *= static_cast<double>(n) / static_cast<double>(n - p);
            dof = n - p;
            break;
        case Estimator::HC2:
        case Estimator::HC3:
            for (Index i = 0; i < n; ++i) {
                const double h = f.leverage(i);
                if (h >= kLeverageCeiling) {
                    throw LeverageOneError("hc_cov: leverage of observation " + std::to_string(i) +
                                           " is " + std::to_string(h) +
                                           "; HC2/HC3 weights are undefined at leverage one");
                }
                const double denom = 1.0 - h;
                w(i) = (variant == Estimator::HC2) ? 1.0 / denom : 1.0 / (denom * denom);
            }
            break;
        default:
            break;
    }

    // Meat: sum_i w_i e_i^2 x_i x_i', assembled as X' diag(w e^2) X.
    const Eigen::VectorXd scaled = w.array() * f.residuals.array().square();
    const Eigen::MatrixXd meat = f.x.transpose() * scaled.asDiagonal() * f.x;

    CovEstimate c;
    c.matrix = symmetrize(f.xtx_inverse * meat * f.xtx_inverse);
    c.estimator_tag = variant;
    c.dof_used = dof;
    return c;
}

double binary_true_se(double var0, double var1, long m, long n) {
    if (!(m > 0 && m < n)) {
        throw BadGroupSizesError("binary_true_se: need 0 < m < n, got m=" + std::to_string(m) +
                                 " n=" + std::to_string(n));
    }
    if (var0 < 0.0 || var1 < 0.0) {
        throw ValidationError("binary_true_se: variances must be non-negative");
    }
    return std::sqrt(var0 / static_cast<double>(n - m) + var1 / static_cast<double>(m));
}

LimitPair asymptotic_limits(double mu, double var0, double var1) {
    if (!(mu > 0.0 && mu < 1.0)) {
        throw BadMuError("asymptotic_limits: mu must lie strictly inside (0, 1), got " +
                         std::to_string(mu));
    }
    if (!(var0 > 0.0 && var1 > 0.0)) {
        throw ValidationError("asymptotic_limits: variances must be strictly positive");
    }
    LimitPair lim{};
    lim.true_limit = std::sqrt(var1 / mu + var0 / (1.0 - mu));
    lim.robust_limit = lim.true_limit;
    const double pooled = mu * var1 + (1.0 - mu) * var0;
    lim.classical_limit = std::sqrt(pooled * (1.0 / mu + 1.0 / (1.0 - mu)));
    return lim;
}

double divergence_ratio(double robust_se, double classical_se) {
    if (classical_se == 0.0) {
        throw DivideByZeroError("divergence_ratio: classical standard error is zero");
    }
    return robust_se / classical_se;
}

}  // namespace sandwich
