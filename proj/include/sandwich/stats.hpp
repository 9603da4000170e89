#pragma once

#include <span>
#include <vector>

namespace sandwich {

double mean(std::span<const double> v);

/// Sample standard deviation, n-1 divisor. NaN for fewer than two values.
double sample_sd(std::span<const double> v);

/// Linear-interpolation quantile (R type 7) of an already sorted vector.
double quantile_sorted(std::span<const double> sorted, double p);

/// Median with the midpoint convention for even counts.
double median(std::vector<double> v);

/// Standard normal inverse CDF (Wichura's AS241, double precision).
double inverse_normal_cdf(double p);

}  // namespace sandwich
