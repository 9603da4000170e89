#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sandwich/rng.hpp"

namespace sandwich {

enum class Family { Laplace, Normal, CenteredExponential };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

/// Disturbance distribution, mean equal to `location` for every family.
///
/// Laplace(loc, b) has variance 2 b^2; Normal(loc, sigma) has variance
/// sigma^2; CenteredExponential(loc, s) is an exponential with mean s,
/// shifted to mean `location` (variance s^2, median location + s(ln 2 - 1)).
struct DisturbanceSpec {
    Family family = Family::Normal;
    double location = 0.0;
    double scale = 1.0;

    double variance() const;
};

/// i.i.d. draws from `spec`, consuming `stream`. Laplace uses the inverse
/// CDF on a symmetric uniform; Normal uses Box-Muller pairs;
/// CenteredExponential uses -s ln U - s plus the location shift.
std::vector<double> sample(const DisturbanceSpec& spec, RngStream& stream, std::size_t count);

/// Single standard normal deviate (one half of a Box-Muller pair).
double standard_normal(RngStream& stream);

}  // namespace sandwich
