#pragma once

#include "sandwich/dataset.hpp"
#include "sandwich/distributions.hpp"
#include "sandwich/rng.hpp"

namespace sandwich {

/// Two-group data-generating process: y_i = beta0 + beta1 x_i + e_i with a
/// binary x fixed by design (first m rows treated) and group-specific
/// disturbance distributions. Defaults are the heteroskedastic Laplace
/// benchmark: n=1000, m=200, Laplace scales 1 (control) and 2 (treated).
struct DgpSpec {
    Index n = 1000;
    Index m = 200;
    double beta0 = 0.0;
    double beta1 = 0.0;
    DisturbanceSpec dist0{Family::Laplace, 0.0, 1.0};
    DisturbanceSpec dist1{Family::Laplace, 0.0, 2.0};

    double mu() const { return static_cast<double>(m) / static_cast<double>(n); }

    /// Throws BadGroupSizesError / ValidationError on 0 < m < n or scale violations.
    void validate() const;
};

/// Draws one dataset: rows 0..m-1 have x=1 with disturbances from dist1,
/// rows m..n-1 have x=0 with disturbances from dist0; design is [1, x] with
/// the binary column flagged. Identical (spec, stream) reproduce identical
/// datasets.
Dataset generate_dataset(const DgpSpec& spec, RngStream& stream);

}  // namespace sandwich
