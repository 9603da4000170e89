#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

namespace sandwich {

using Index = Eigen::Index;

/// Outcome vector plus design matrix, immutable once built.
///
/// The design matrix is taken as-is: callers supply the intercept column
/// explicitly (the CLI prepends a column of ones by default). When
/// `binary_column` is set, that column holds exactly the values 0 and 1 with
/// both present, and `m` caches the count of ones.
struct Dataset {
    Eigen::VectorXd y;
    Eigen::MatrixXd x;
    std::optional<Index> binary_column;
    std::optional<Index> m;

    Index n() const { return y.size(); }
    Index p() const { return x.cols(); }
};

/// Builds a Dataset and establishes its invariants: finite entries,
/// n >= p >= 1 with at least two rows, a well-formed binary column when one
/// is flagged (0 < m < n), and a full-rank design (pivoted QR, tolerance
/// 1e-10 relative to the largest pivot).
///
/// Throws NonFiniteError, DegenerateBinaryError, CollinearError,
/// ValidationError.
Dataset validate_dataset(const Eigen::VectorXd& y, const Eigen::MatrixXd& x,
                         std::optional<Index> binary_column = std::nullopt);

/// Row indices whose binary-column entry equals `value` (0 or 1).
std::vector<Index> group_rows(const Dataset& d, int value);

}  // namespace sandwich
