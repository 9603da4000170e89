#include "sandwich/ols.hpp"

#include <string>
#include <utility>

#include "sandwich/errors.hpp"

namespace sandwich {

OlsSolver::OlsSolver(Eigen::MatrixXd x) : x_(std::move(x)), qr_(x_) {
    qr_.setThreshold(1e-10);
    const Index p = x_.cols();
    const Index n = x_.rows();
    if (qr_.rank() < p) {
        throw CollinearError("ols: design matrix is rank deficient (rank " +
                             std::to_string(qr_.rank()) + " < p=" + std::to_string(p) + ")");
    }

    // X P = Q R, so (X'X)^-1 = P R^-1 R^-T P'.
    const Eigen::MatrixXd r = qr_.matrixR().topLeftCorner(p, p).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv =
        r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    const Eigen::MatrixXd unpivoted = r_inv * r_inv.transpose();
    xtx_inverse_ = qr_.colsPermutation() * unpivoted * qr_.colsPermutation().transpose();

    // Hat diagonal h_i = ||row i of thin Q||^2; invariant under column pivoting.
    const Eigen::MatrixXd thin_q = qr_.householderQ() * Eigen::MatrixXd::Identity(n, p);
    leverage_ = thin_q.rowwise().squaredNorm();
}

FitResult OlsSolver::fit(const Eigen::VectorXd& y, std::optional<Index> binary_column,
                         std::optional<Index> m) const {
    FitResult f;
    f.beta = qr_.solve(y);
    f.residuals = y - x_ * f.beta;
    f.xtx_inverse = xtx_inverse_;
    f.x = x_;
    f.leverage = leverage_;
    f.n = x_.rows();
    f.p = x_.cols();
    f.binary_column = binary_column;
    f.m = m;
    return f;
}

FitResult ols_fit(const Dataset& d) {
    OlsSolver solver(d.x);
    return solver.fit(d.y, d.binary_column, d.m);
}

std::pair<double, double> group_means(const Dataset& d) {
    if (!d.binary_column) {
        throw MissingBinaryColumnError("group_means: dataset has no binary column");
    }
    const Index j = *d.binary_column;
    double sum0 = 0.0, sum1 = 0.0;
    Index n0 = 0, n1 = 0;
    for (Index i = 0; i < d.n(); ++i) {
        if (d.x(i, j) == 1.0) {
            sum1 += d.y(i);
            ++n1;
        } else {
            sum0 += d.y(i);
            ++n0;
        }
    }
    if (n0 == 0 || n1 == 0) {
        throw DegenerateBinaryError("group_means: one of the groups is empty");
    }
    return {sum0 / static_cast<double>(n0), sum1 / static_cast<double>(n1)};
}

}  // namespace sandwich
