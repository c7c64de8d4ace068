#pragma once

#include <functional>
#include <string>

namespace csx {

/// Reaction nonlinearity f with derivative, potential G(u) = int_u^1 f
/// (so G' = -f), and the closed range the trace is expected to live in.
/// The regularity tag records the Holder exponent gamma > max{0,1-2s}
/// as metadata; it is not enforced.
struct Nonlinearity {
    std::string name;
    std::function<double(double)> f;
    std::function<double(double)> fprime;
    std::function<double(double)> G;
    double umin = -1.0;
    double umax = 1.0;
    std::string regularity_tag;

    double clamp(double u) const { return u < umin ? umin : (u > umax ? umax : u); }
};

/// Minimum of G over the range and the smallest point attaining it.
struct PotentialMin {
    double c_u;
    double tau;
};

/// f(u) = u - u^3, G(u) = (1-u^2)^2/4 on [-1,1]. Double well with G(+-1)=0.
Nonlinearity make_allen_cahn();

/// f(u) = sin(pi u)/pi, G(u) = (1+cos(pi u))/pi^2 on [-1,1]. The s=1/2
/// layer is (2/pi) arctan(x) with extension (2/pi) arctan(x/(1+lambda)).
Nonlinearity make_sine_halfs();

/// Custom nonlinearity; G is computed by adaptive quadrature of int_u^1 f.
/// Throws std::domain_error on an empty or inverted range.
Nonlinearity make_custom(std::function<double(double)> f,
                         std::function<double(double)> fprime,
                         double umin, double umax,
                         std::string name = "custom");

/// Global minimum of G over [umin,umax]; 4096-point scan refined by
/// golden section, tie-break to the smallest minimizer.
PotentialMin potential_min(const Nonlinearity& nl);

} // namespace csx
