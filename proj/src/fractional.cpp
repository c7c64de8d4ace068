#include "csx/fractional.hpp"

#include <cmath>
#include <stdexcept>

namespace csx {

double ds_constant(double s) {
    if (!(s > 0.0 && s < 1.0)) {
        throw std::domain_error("ds_constant: s must lie in (0,1)");
    }
    // Both gamma arguments are in (0,1), so lgamma is exact-signed and the
    // product is positive; going through logs keeps full relative accuracy
    // near the endpoints where Gamma blows up.
    return std::exp((2.0 * s - 1.0) * std::log(2.0) + std::lgamma(s) - std::lgamma(1.0 - s));
}

FractionalOrder FractionalOrder::from_s(double s) {
    return FractionalOrder{s, 1.0 - 2.0 * s, ds_constant(s)};
}

} // namespace csx
