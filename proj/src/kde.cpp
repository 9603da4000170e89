#include "sandwich/kde.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sandwich/errors.hpp"
#include "sandwich/stats.hpp"

namespace sandwich {

double silverman_bandwidth(std::span<const double> samples) {
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double sd = sample_sd(sorted);
    const double iqr = quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25);
    double spread = std::min(sd, iqr / 1.34);
    if (spread <= 0.0) spread = sd;
    return 0.9 * spread * std::pow(static_cast<double>(samples.size()), -0.2);
}

DensityCurve kde(std::span<const double> samples, std::optional<double> bandwidth,
                 std::size_t grid_points) {
    if (samples.size() < 2) {
        throw DegenerateSampleError("kde: need at least two samples");
    }
    const auto [min_it, max_it] = std::minmax_element(samples.begin(), samples.end());
    if (*min_it == *max_it) {
        throw DegenerateSampleError("kde: samples have zero spread");
    }
    double h = bandwidth ? *bandwidth : silverman_bandwidth(samples);
    if (!(h > 0.0)) {
        throw ValidationError("kde: bandwidth must be strictly positive");
    }

    DensityCurve curve;
    curve.bandwidth = h;
    curve.grid.resize(grid_points);
    curve.density.assign(grid_points, 0.0);

    const double lo = *min_it - 3.0 * h;
    const double hi = *max_it + 3.0 * h;
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    for (std::size_t g = 0; g < grid_points; ++g) {
        curve.grid[g] = lo + step * static_cast<double>(g);
    }

    const double norm =
        1.0 / (static_cast<double>(samples.size()) * h * std::sqrt(2.0 * std::numbers::pi));
    for (double xi : samples) {
        // Each kernel only reaches a +-6h window of the grid.
        const auto first =
            static_cast<std::ptrdiff_t>(std::max(0.0, std::floor((xi - 6.0 * h - lo) / step)));
        const auto last = std::min<std::ptrdiff_t>(
            static_cast<std::ptrdiff_t>(grid_points) - 1,
            static_cast<std::ptrdiff_t>(std::ceil((xi + 6.0 * h - lo) / step)));
        for (std::ptrdiff_t g = first; g <= last; ++g) {
            const double z = (curve.grid[static_cast<std::size_t>(g)] - xi) / h;
            curve.density[static_cast<std::size_t>(g)] += norm * std::exp(-0.5 * z * z);
        }
    }
    return curve;
}

}  // namespace sandwich
