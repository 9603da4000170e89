// Independent reference implementations the library is checked against.
// Deliberately naive: explicit normal equations in extended precision and
// the binary-design closed forms, with no code shared with the library.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Core>

namespace oracle {

/// Least squares through explicit normal equations X'X b = X'y, accumulated
/// and solved in long double with partial-pivot Gaussian elimination.
inline Eigen::VectorXd ols_beta(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
    const Eigen::Index n = x.rows();
    const Eigen::Index p = x.cols();

    std::vector<std::vector<long double>> a(static_cast<size_t>(p),
                                            std::vector<long double>(static_cast<size_t>(p), 0));
    std::vector<long double> b(static_cast<size_t>(p), 0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < p; ++j) {
            const long double xij = x(i, j);
            b[static_cast<size_t>(j)] += xij * static_cast<long double>(y[i]);
            for (Eigen::Index k = 0; k < p; ++k) {
                a[static_cast<size_t>(j)][static_cast<size_t>(k)] +=
                    xij * static_cast<long double>(x(i, k));
            }
        }
    }

    const auto np = static_cast<size_t>(p);
    for (size_t col = 0; col < np; ++col) {
        size_t pivot = col;
        for (size_t r = col + 1; r < np; ++r) {
            if (std::fabs(static_cast<double>(a[r][col])) >
                std::fabs(static_cast<double>(a[pivot][col]))) {
                pivot = r;
            }
        }
        if (a[pivot][col] == 0.0L) throw std::runtime_error("oracle: singular normal equations");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (size_t r = col + 1; r < np; ++r) {
            const long double factor = a[r][col] / a[col][col];
            for (size_t c = col; c < np; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<long double> beta(np, 0);
    for (size_t r = np; r-- > 0;) {
        long double acc = b[r];
        for (size_t c = r + 1; c < np; ++c) acc -= a[r][c] * beta[c];
        beta[r] = acc / a[r][r];
    }

    Eigen::VectorXd out(p);
    for (Eigen::Index j = 0; j < p; ++j) out[j] = static_cast<double>(beta[static_cast<size_t>(j)]);
    return out;
}

/// Group means and sums of squared residuals for the design [1, x01].
struct BinaryGroups {
    long double mean0 = 0, mean1 = 0;
    long double ssr0 = 0, ssr1 = 0;  ///< within-group squared deviations from the group mean
    long n0 = 0, n1 = 0;
};

inline BinaryGroups binary_groups(const Eigen::VectorXd& y, const Eigen::VectorXd& x01) {
    BinaryGroups g;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        if (x01[i] == 1.0) {
            g.mean1 += y[i];
            ++g.n1;
        } else {
            g.mean0 += y[i];
            ++g.n0;
        }
    }
    g.mean0 /= g.n0;
    g.mean1 /= g.n1;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        const long double dev = y[i] - (x01[i] == 1.0 ? g.mean1 : g.mean0);
        (x01[i] == 1.0 ? g.ssr1 : g.ssr0) += dev * dev;
    }
    return g;
}

/// HC0 closed form: sqrt(avg squared residual over X=0 / (n-m) + avg over X=1 / m).
inline double hc0_binary_se(const Eigen::VectorXd& y, const Eigen::VectorXd& x01) {
    const BinaryGroups g = binary_groups(y, x01);
    const long double v = (g.ssr0 / g.n0) / g.n0 + (g.ssr1 / g.n1) / g.n1;
    return static_cast<double>(std::sqrt(static_cast<double>(v)));
}

/// Uncorrected classical closed form: sqrt((sum of squared residuals / n)(1/(n-m) + 1/m)).
inline double classical_binary_se(const Eigen::VectorXd& y, const Eigen::VectorXd& x01) {
    const BinaryGroups g = binary_groups(y, x01);
    const long double s2 = (g.ssr0 + g.ssr1) / (g.n0 + g.n1);
    const long double v = s2 * (1.0L / g.n0 + 1.0L / g.n1);
    return static_cast<double>(std::sqrt(static_cast<double>(v)));
}

}  // namespace oracle
