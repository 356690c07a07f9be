#pragma once

#include <cstdint>
#include <vector>

namespace photospin {

/// Standard error of a Bernoulli rate estimate k/n.
double binomial_stderr(std::int64_t k, std::int64_t n);

/// A probability estimate with its standard error.
struct Estimate {
    double value = 0.0;
    double stderr = 0.0;
};

Estimate binomial_estimate(std::int64_t k, std::int64_t n);

/// Fringe visibility from probabilities sampled on a uniform phase grid
/// covering an integer number of periods: the first-harmonic amplitude of
/// p(phi) = offset + (V/2) cos(h phi + phase), returned with the stderr
/// propagated from per-point errors. `harmonic` is h in grid units.
Estimate fit_visibility(const std::vector<double>& phases,
                        const std::vector<Estimate>& probs, int harmonic = 1);

/// Weighted least-squares fit of y = a * exp(-x / tau); returns tau.
/// Linear regression on log y, weights from stderr. Points with
/// non-positive value are skipped.
double fit_exponential_decay(const std::vector<double>& x,
                             const std::vector<Estimate>& y);

/// Weighted least-squares fit of y = a * exp(-(x / tau)^2); returns tau.
double fit_gaussian_decay(const std::vector<double>& x, const std::vector<Estimate>& y);

} // namespace photospin
