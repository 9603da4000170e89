#include "sandwich/dgp.hpp"

#include <string>

#include "sandwich/errors.hpp"

namespace sandwich {

void DgpSpec::validate() const {
    if (!(m > 0 && m < n)) {
        throw BadGroupSizesError("dgp: need 0 < m < n, got m=" + std::to_string(m) +
                                 " n=" + std::to_string(n));
    }
    if (!(dist0.scale > 0.0) || !(dist1.scale > 0.0)) {
        throw ValidationError("dgp: disturbance scales must be strictly positive");
    }
}

Dataset generate_dataset(const DgpSpec& spec, RngStream& stream) {
    spec.validate();
    const Index n = spec.n;
    const Index m = spec.m;

    const std::vector<double> treated = sample(spec.dist1, stream, static_cast<std::size_t>(m));
    const std::vector<double> control = sample(spec.dist0, stream, static_cast<std::size_t>(n - m));

    Dataset d;
    d.y.resize(n);
    d.x.resize(n, 2);
    d.x.col(0).setOnes();
    for (Index i = 0; i < m; ++i) {
        d.x(i, 1) = 1.0;
        d.y(i) = spec.beta0 + spec.beta1 + treated[static_cast<std::size_t>(i)];
    }
    for (Index i = m; i < n; ++i) {
        d.x(i, 1) = 0.0;
        d.y(i) = spec.beta0 + control[static_cast<std::size_t>(i - m)];
    }
    d.binary_column = 1;
    d.m = m;
    return d;
}

}  // namespace sandwich
