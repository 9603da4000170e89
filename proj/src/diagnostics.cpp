#include "sandwich/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/QR>

#include "sandwich/distributions.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/parallel.hpp"
#include "sandwich/stats.hpp"

namespace sandwich {

namespace {

// Centered orthonormal basis of the auxiliary regressors for the
// heteroskedasticity block: distinct cross products x_a * x_b, a <= b,
// with constant and collinear columns dropped. Depends only on the design,
// so it is built once and shared with every bootstrap replicate.
Eigen::MatrixXd aux_basis(const Eigen::MatrixXd& x) {
    const Eigen::Index n = x.rows();
    const Eigen::Index p = x.cols();

    std::vector<Eigen::VectorXd> cols;
    for (Eigen::Index a = 0; a < p; ++a) {
        for (Eigen::Index b = a; b < p; ++b) {
            Eigen::VectorXd col = x.col(a).cwiseProduct(x.col(b));
            col.array() -= col.mean();
            const double scale = col.cwiseAbs().maxCoeff();
            if (scale > 1e-12 * (1.0 + x.cwiseAbs().maxCoeff())) {
                cols.push_back(std::move(col));
            }
        }
    }
    if (cols.empty()) return Eigen::MatrixXd(n, 0);

    Eigen::MatrixXd a(n, static_cast<Eigen::Index>(cols.size()));
    for (Eigen::Index j = 0; j < a.cols(); ++j) a.col(j) = cols[static_cast<size_t>(j)];

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    qr.setThreshold(1e-10);
    const Eigen::Index rank = qr.rank();
    if (rank == 0) return Eigen::MatrixXd(n, 0);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, rank);
    return q;
}

ImTestResult::Components im_components(const Eigen::VectorXd& residuals,
                                       const Eigen::MatrixXd& basis, double sigma2) {
    const auto n = static_cast<double>(residuals.size());
    const Eigen::VectorXd z = residuals / std::sqrt(sigma2);

    ImTestResult::Components c;
    if (basis.cols() > 0) {
        const Eigen::VectorXd u = z.array().square() - 1.0;
        c.heteroskedasticity = 0.5 * (basis.transpose() * u).squaredNorm();
    }
    const double m3 = z.array().cube().mean();
    const double m4 = z.array().square().square().mean();
    c.skewness = n * m3 * m3 / 6.0;
    c.kurtosis = n * (m4 - 3.0) * (m4 - 3.0) / 24.0;
    return c;
}

double mle_sigma2(const Eigen::VectorXd& residuals, const Eigen::VectorXd& y) {
    const double sigma2 = residuals.squaredNorm() / static_cast<double>(residuals.size());
    const double floor = 1e-12 * (1.0 + y.cwiseAbs().maxCoeff());
    if (std::sqrt(sigma2) <= floor) {
        throw DegenerateSampleError(
            "im_test: residual spread is numerically zero; the null model fits exactly");
    }
    return sigma2;
}

}  // namespace

ImTestResult im_test(const Dataset& d, int bootstrap_replicates, const RngStream& stream,
                     int workers) {
    if (bootstrap_replicates < 99) {
        throw ValidationError("im_test: bootstrap_replicates must be at least 99");
    }
    validate_dataset(d.y, d.x, d.binary_column);

    OlsSolver solver(d.x);
    const FitResult fit = solver.fit(d.y);
    const double sigma2 = mle_sigma2(fit.residuals, d.y);
    const Eigen::MatrixXd basis = aux_basis(d.x);

    ImTestResult result;
    result.components = im_components(fit.residuals, basis, sigma2);
    result.statistic = result.components.heteroskedasticity + result.components.skewness +
                       result.components.kurtosis;
    result.bootstrap_replicates = bootstrap_replicates;

    const Eigen::VectorXd fitted = d.x * fit.beta;
    const double sigma = std::sqrt(sigma2);
    const auto b_count = static_cast<size_t>(bootstrap_replicates);
    std::vector<double> boot_stats(b_count);

    parallel_for(b_count, workers, [&](size_t b) {
        RngStream sub = stream.substream(static_cast<uint64_t>(b));
        Eigen::VectorXd ystar(d.n());
        for (Eigen::Index i = 0; i < d.n(); ++i) {
            ystar[i] = fitted[i] + sigma * standard_normal(sub);
        }
        const FitResult bf = solver.fit(ystar);
        const double s2 = bf.residuals.squaredNorm() / static_cast<double>(d.n());
        const ImTestResult::Components c = im_components(bf.residuals, basis, s2);
        boot_stats[b] = c.heteroskedasticity + c.skewness + c.kurtosis;
    });

    int exceed = 0;
    for (double s : boot_stats) {
        if (s >= result.statistic) ++exceed;
    }
    result.bootstrap_p =
        static_cast<double>(1 + exceed) / static_cast<double>(bootstrap_replicates + 1);
    return result;
}

QqData qq_normal(const FitResult& f) {
    const Eigen::Index n = f.residuals.size();
    if (n < 3) throw ValidationError("qq_normal: need at least 3 residuals");

    std::vector<double> sample(f.residuals.data(), f.residuals.data() + n);
    const double sd = sample_sd(sample);
    if (!(sd > 0.0) || !std::isfinite(sd)) {
        throw DegenerateSampleError("qq_normal: residual spread is numerically zero");
    }
    std::sort(sample.begin(), sample.end());

    QqData out;
    out.pairs.reserve(static_cast<size_t>(n));
    const auto dn = static_cast<double>(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double prob = (static_cast<double>(i) + 0.5) / dn;
        out.pairs.emplace_back(inverse_normal_cdf(prob), sample[static_cast<size_t>(i)] / sd);
    }
    return out;
}

double diff_in_medians(const Dataset& d) {
    if (!d.binary_column) {
        throw MissingBinaryColumnError("diff_in_medians: dataset has no binary column");
    }
    validate_dataset(d.y, d.x, d.binary_column);

    std::vector<double> y0;
    std::vector<double> y1;
    const Eigen::Index col = *d.binary_column;
    for (Eigen::Index i = 0; i < d.n(); ++i) {
        (d.x(i, col) == 1.0 ? y1 : y0).push_back(d.y[i]);
    }
    return median(y1) - median(y0);
}

}  // namespace sandwich
