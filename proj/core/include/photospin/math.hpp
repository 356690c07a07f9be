#pragma once

#include <cstddef>
#include <vector>

namespace photospin {

/// Bessel function of the first kind J_n(x), integer order n >= 0,
/// by direct power series (adequate for the modulation depths used here).
double bessel_j(int order, double x);

/// Smallest positive x on the rising branch of J_n with J_n(x)^2 = target,
/// found by bisection. Throws InvalidParameterError if unreachable.
double solve_modulation_depth(double target_efficiency, int order = 1);

/// Lorentzian power transmission of an etalon: 1 / (1 + (2 d / fwhm)^2).
double lorentzian_transmission(double detuning_ghz, double fwhm_ghz);

/// Gauss-Hermite quadrature nodes/weights for integrals against the standard
/// normal density: E[f(x)] ~ sum_i w_i f(x_i), x ~ N(0, 1).
struct GaussHermite {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussHermite gauss_hermite(int n);

} // namespace photospin
