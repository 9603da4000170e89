#include "sandwich/dataset.hpp"

#include <Eigen/QR>
#include <cmath>
#include <string>

#include "sandwich/errors.hpp"

namespace sandwich {

namespace {

constexpr double kRankTolerance = 1e-10;

}  // namespace

Dataset validate_dataset(const Eigen::VectorXd& y, const Eigen::MatrixXd& x,
                         std::optional<Index> binary_column) {
    const Index n = y.size();
    const Index p = x.cols();
    if (x.rows() != n) {
        throw ValidationError("dataset: y has " + std::to_string(n) + " rows but x has " +
                              std::to_string(x.rows()));
    }
    if (n < 2) {
        throw ValidationError("dataset: need at least 2 rows, got " + std::to_string(n));
    }
    if (p < 1 || n < p) {
        throw ValidationError("dataset: need n >= p >= 1, got n=" + std::to_string(n) +
                              " p=" + std::to_string(p));
    }
    if (!y.allFinite()) {
        throw NonFiniteError("dataset: outcome contains a NaN or infinite entry");
    }
    if (!x.allFinite()) {
        throw NonFiniteError("dataset: design matrix contains a NaN or infinite entry");
    }

    Dataset d;
    d.y = y;
    d.x = x;
    d.binary_column = binary_column;

    if (binary_column) {
        const Index j = *binary_column;
        if (j < 0 || j >= p) {
            throw ValidationError("dataset: binary column index " + std::to_string(j) +
                                  " out of range for p=" + std::to_string(p));
        }
        Index ones = 0;
        for (Index i = 0; i < n; ++i) {
            const double v = x(i, j);
            if (v == 1.0) {
                ++ones;
            } else if (v != 0.0) {
                throw DegenerateBinaryError("dataset: binary column entry at row " +
                                            std::to_string(i) + " is " + std::to_string(v) +
                                            ", expected exactly 0 or 1");
            }
        }
        if (ones == 0 || ones == n) {
            throw DegenerateBinaryError("dataset: binary column must contain both 0 and 1 (m=" +
                                        std::to_string(ones) + ", n=" + std::to_string(n) + ")");
        }
        d.m = ones;
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(x);
    qr.setThreshold(kRankTolerance);
    if (qr.rank() < p) {
        throw CollinearError("dataset: design matrix is rank deficient (rank " +
                             std::to_string(qr.rank()) + " < p=" + std::to_string(p) + ")");
    }
    return d;
}

std::vector<Index> group_rows(const Dataset& d, int value) {
    if (!d.binary_column) {
        throw MissingBinaryColumnError("group_rows: dataset has no binary column");
    }
    std::vector<Index> rows;
    rows.reserve(static_cast<std::size_t>(d.n()));
    const Index j = *d.binary_column;
    for (Index i = 0; i < d.n(); ++i) {
        if (d.x(i, j) == static_cast<double>(value)) rows.push_back(i);
    }
    return rows;
}

}  // namespace sandwich
