#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Core>

#include "oracles.hpp"
#include "sandwich/dataset.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/ols.hpp"
#include "sandwich/rng.hpp"

using namespace sandwich;

namespace {

Dataset hand_dataset() {
    Eigen::VectorXd y(4);
    y << 3, 5, 2, 4;
    Eigen::MatrixXd x(4, 2);
    x << 1, 1, 1, 1, 1, 0, 1, 0;
    return validate_dataset(y, x, 1);
}

Dataset random_binary_dataset(RngStream& stream, Index n_min = 10, Index n_max = 500) {
    const auto span = static_cast<uint64_t>(n_max - n_min + 1);
    const auto n = n_min + static_cast<Index>(stream.next_u64() % span);
    const auto m = 1 + static_cast<Index>(stream.next_u64() % static_cast<uint64_t>(n - 1));

    Eigen::VectorXd y(n);
    Eigen::MatrixXd x(n, 2);
    for (Index i = 0; i < n; ++i) {
        x(i, 0) = 1.0;
        x(i, 1) = i < m ? 1.0 : 0.0;
        const double noise = 4.0 * (stream.next_unit() - 0.5);
        y[i] = 0.7 + 1.9 * x(i, 1) + noise;
    }
    return validate_dataset(y, x, 1);
}

}  // namespace

TEST_CASE("hand example: group means 3 and 4") {
    const FitResult f = ols_fit(hand_dataset());
    CHECK(std::abs(f.beta[0] - 3.0) < 1e-12);
    CHECK(std::abs(f.beta[1] - 1.0) < 1e-12);
    Eigen::VectorXd expected(4);
    expected << -1, 1, -1, 1;
    CHECK((f.residuals - expected).cwiseAbs().maxCoeff() < 1e-12);

    const auto [mean0, mean1] = group_means(hand_dataset());
    CHECK(mean0 == 3.0);
    CHECK(mean1 == 4.0);
}

TEST_CASE("constant outcome on an intercept-only design") {
    Eigen::VectorXd y = Eigen::VectorXd::Constant(6, 7.0);
    Eigen::MatrixXd x = Eigen::MatrixXd::Ones(6, 1);
    const FitResult f = ols_fit(validate_dataset(y, x));
    CHECK(std::abs(f.beta[0] - 7.0) < 1e-14);
    CHECK(f.residuals.cwiseAbs().maxCoeff() < 1e-14);

    Eigen::MatrixXd xb(6, 2);
    xb.col(0).setOnes();
    xb.col(1) << 1, 1, 1, 0, 0, 0;
    const auto [mean0, mean1] = group_means(validate_dataset(y, xb, 1));
    CHECK(mean0 == 7.0);
    CHECK(mean1 == 7.0);
}

TEST_CASE("random 50x3 design agrees with the extended-precision oracle") {
    RngStream stream(11, 0);
    Eigen::VectorXd y(50);
    Eigen::MatrixXd x(50, 3);
    for (Index i = 0; i < 50; ++i) {
        x(i, 0) = 1.0;
        x(i, 1) = 10.0 * (stream.next_unit() - 0.5);
        x(i, 2) = 3.0 * stream.next_unit() + 0.1 * x(i, 1);
        y[i] = 2.0 - 0.5 * x(i, 1) + 1.25 * x(i, 2) + (stream.next_unit() - 0.5);
    }
    const FitResult f = ols_fit(validate_dataset(y, x));
    const Eigen::VectorXd ref = oracle::ols_beta(x, y);
    CHECK((f.beta - ref).cwiseAbs().maxCoeff() < 1e-8);

    const double tol = 1e-8 * (1.0 + y.cwiseAbs().maxCoeff());
    CHECK((x.transpose() * f.residuals).cwiseAbs().maxCoeff() < tol);
}

TEST_CASE("method-of-moments equivalence on 50 random binary datasets") {
    RngStream stream(12, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const Dataset d = random_binary_dataset(stream);
        const FitResult f = ols_fit(d);
        const auto [mean0, mean1] = group_means(d);
        const double scale = std::max(1.0, std::abs(mean0)) ;
        CHECK(std::abs(f.beta[0] - mean0) < 1e-10 * scale);
        CHECK(std::abs(f.beta[1] - (mean1 - mean0)) < 1e-10 * std::max(1.0, std::abs(mean1 - mean0)));

        const double tol = 1e-8 * (1.0 + d.y.cwiseAbs().maxCoeff());
        CHECK((d.x.transpose() * f.residuals).cwiseAbs().maxCoeff() < tol);
    }
}

TEST_CASE("affine equivariance in y") {
    RngStream stream(13, 0);
    const Dataset d = random_binary_dataset(stream, 40, 60);
    const FitResult base = ols_fit(d);

    const double a = 2.5, b = -4.0;
    const Eigen::VectorXd scaled = (a * d.y.array() + b).matrix();
    const Dataset shifted = validate_dataset(scaled, d.x, d.binary_column);
    const FitResult f = ols_fit(shifted);

    Eigen::VectorXd expected = a * base.beta;
    expected[0] += b;  // intercept column absorbs the shift
    CHECK((f.beta - expected).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("permutation invariance of the coefficients") {
    RngStream stream(14, 0);
    const Dataset d = random_binary_dataset(stream, 30, 80);
    const FitResult base = ols_fit(d);

    std::vector<Index> perm(static_cast<size_t>(d.n()));
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t i = perm.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[stream.next_u64() % i]);
    }
    Eigen::VectorXd y(d.n());
    Eigen::MatrixXd x(d.n(), d.p());
    for (Index i = 0; i < d.n(); ++i) {
        y[i] = d.y[perm[static_cast<size_t>(i)]];
        x.row(i) = d.x.row(perm[static_cast<size_t>(i)]);
    }
    const FitResult f = ols_fit(validate_dataset(y, x, 1));
    CHECK((f.beta - base.beta).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("binary-design leverages are 1/m and 1/(n-m)") {
    RngStream stream(15, 0);
    const Dataset d = random_binary_dataset(stream, 20, 60);
    const FitResult f = ols_fit(d);
    const auto m = static_cast<double>(*d.m);
    const auto n0 = static_cast<double>(d.n() - *d.m);
    for (Index i = 0; i < d.n(); ++i) {
        const double expected = d.x(i, 1) == 1.0 ? 1.0 / m : 1.0 / n0;
        CHECK(std::abs(f.leverage[i] - expected) < 1e-12);
    }
    CHECK(std::abs(f.leverage.sum() - static_cast<double>(d.p())) < 1e-10);
}

TEST_CASE("solver reuse across outcomes matches one-shot fits") {
    RngStream stream(16, 0);
    const Dataset d1 = random_binary_dataset(stream, 25, 25);
    Eigen::VectorXd y2 = d1.y.array() * 1.7 - 0.3;

    OlsSolver solver(d1.x);
    const FitResult a = solver.fit(d1.y, d1.binary_column, d1.m);
    const FitResult b = solver.fit(y2, d1.binary_column, d1.m);

    CHECK((a.beta - ols_fit(d1).beta).cwiseAbs().maxCoeff() == 0.0);
    const Dataset d2 = validate_dataset(y2, d1.x, d1.binary_column);
    CHECK((b.beta - ols_fit(d2).beta).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("rank-deficient design rejected at the solver") {
    Eigen::MatrixXd x(5, 2);
    x.col(0).setConstant(2.0);
    x.col(1).setConstant(1.0);  // scalar multiple of column 0
    CHECK_THROWS_AS(OlsSolver{x}, CollinearError);
}

TEST_CASE("group_means requires the binary tag") {
    Eigen::VectorXd y(3);
    y << 1, 2, 3;
    Eigen::MatrixXd x = Eigen::MatrixXd::Ones(3, 1);
    const Dataset d = validate_dataset(y, x);
    CHECK_THROWS_AS(group_means(d), MissingBinaryColumnError);
}
