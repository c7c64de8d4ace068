#pragma once

namespace csx {

/// Normalizing constant d_s = 2^{2s-1} Gamma(s)/Gamma(1-s) of the
/// weighted Neumann trace. Blows up as s->0 and vanishes linearly as s->1.
/// Throws std::domain_error unless 0 < s < 1.
double ds_constant(double s);

/// Fractional order s with the derived weight exponent a = 1-2s and d_s.
struct FractionalOrder {
    double s;
    double a;   // 1 - 2s, in (-1,1)
    double ds;  // 2^{2s-1} Gamma(s)/Gamma(1-s)

    static FractionalOrder from_s(double s);
};

} // namespace csx
