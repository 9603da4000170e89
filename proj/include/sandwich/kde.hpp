#pragma once

#include <optional>
#include <span>
#include <vector>

namespace sandwich {

/// Gaussian-kernel density estimate evaluated on a fixed grid.
/// The grid spans [min - 3h, max + 3h]; it is not truncated at zero even for
/// nonnegative samples such as standard errors.
struct DensityCurve {
    std::vector<double> grid;      ///< ascending abscissae
    std::vector<double> density;   ///< nonnegative, integrates to ~1
    double bandwidth = 0.0;
};

/// Silverman's rule of thumb: 0.9 min(sd, IQR/1.34) n^(-1/5).
/// Falls back to the sd when the IQR collapses to zero.
double silverman_bandwidth(std::span<const double> samples);

/// Throws DegenerateSampleError for fewer than two samples or zero spread;
/// ValidationError for a non-positive explicit bandwidth.
DensityCurve kde(std::span<const double> samples, std::optional<double> bandwidth = std::nullopt,
                 std::size_t grid_points = 512);

}  // namespace sandwich
