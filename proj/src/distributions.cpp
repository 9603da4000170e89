#include "sandwich/distributions.hpp"

#include <cmath>
#include <numbers>

#include "sandwich/errors.hpp"

namespace sandwich {

namespace {

double laplace_draw(const DisturbanceSpec& spec, RngStream& stream) {
    // Inverse CDF: x = loc - b sign(u) ln(1 - 2|u|), u uniform on (-1/2, 1/2).
    const double u = stream.next_unit() - 0.5;
    const double sign = (u > 0.0) ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
    return spec.location - spec.scale * sign * std::log1p(-2.0 * std::abs(u));
}

double centered_exponential_draw(const DisturbanceSpec& spec, RngStream& stream) {
    return spec.location - spec.scale * (std::log(stream.next_unit()) + 1.0);
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::Laplace: return "laplace";
        case Family::Normal: return "normal";
        case Family::CenteredExponential: return "centered_exponential";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    if (name == "laplace") return Family::Laplace;
    if (name == "normal") return Family::Normal;
    if (name == "centered_exponential") return Family::CenteredExponential;
    return std::nullopt;
}

double DisturbanceSpec::variance() const {
    switch (family) {
        case Family::Laplace: return 2.0 * scale * scale;
        case Family::Normal: return scale * scale;
        case Family::CenteredExponential: return scale * scale;
    }
    return 0.0;
}

double standard_normal(RngStream& stream) {
    const double u1 = stream.next_unit();
    const double u2 = stream.next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> sample(const DisturbanceSpec& spec, RngStream& stream, std::size_t count) {
    if (!(spec.scale > 0.0)) {
        throw ValidationError("sample: scale must be strictly positive");
    }
    std::vector<double> out;
    out.reserve(count);
    switch (spec.family) {
        case Family::Laplace:
            for (std::size_t i = 0; i < count; ++i) out.push_back(laplace_draw(spec, stream));
            break;
        case Family::Normal: {
            // Box-Muller pairs; the spare half of a trailing pair is dropped.
            std::size_t i = 0;
            while (i < count) {
                const double u1 = stream.next_unit();
                const double u2 = stream.next_unit();
                const double radius = std::sqrt(-2.0 * std::log(u1));
                const double angle = 2.0 * std::numbers::pi * u2;
                out.push_back(spec.location + spec.scale * radius * std::cos(angle));
                ++i;
                if (i < count) {
                    out.push_back(spec.location + spec.scale * radius * std::sin(angle));
                    ++i;
                }
            }
            break;
        }
        case Family::CenteredExponential:
            for (std::size_t i = 0; i < count; ++i) {
                out.push_back(centered_exponential_draw(spec, stream));
            }
            break;
    }
    return out;
}

}  // namespace sandwich
