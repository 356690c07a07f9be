#include "photospin/stats.hpp"

#include <cmath>

#include "photospin/errors.hpp"

namespace photospin {

double binomial_stderr(std::int64_t k, std::int64_t n) {
    if (n <= 0) return 0.0;
    const double p = static_cast<double>(k) / static_cast<double>(n);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

Estimate binomial_estimate(std::int64_t k, std::int64_t n) {
    if (n <= 0) return {0.0, 0.0};
    return {static_cast<double>(k) / static_cast<double>(n), binomial_stderr(k, n)};
}

Estimate fit_visibility(const std::vector<double>& phases,
                        const std::vector<Estimate>& probs, int harmonic) {
    if (phases.size() != probs.size() || phases.size() < 4) {
        throw InvalidParameterError("visibility fit needs matching vectors, >= 4 points");
    }
    const double n = static_cast<double>(phases.size());
    double c = 0.0, s = 0.0, var_c = 0.0, var_s = 0.0;
    for (std::size_t i = 0; i < phases.size(); ++i) {
        const double cs = std::cos(harmonic * phases[i]);
        const double sn = std::sin(harmonic * phases[i]);
        c += probs[i].value * cs;
        s += probs[i].value * sn;
        var_c += probs[i].stderr * probs[i].stderr * cs * cs;
        var_s += probs[i].stderr * probs[i].stderr * sn * sn;
    }
    // p = offset + (V/2) cos(...): first harmonic amplitude V/2 = 2|C|/n.
    const double amp_c = 2.0 * c / n, amp_s = 2.0 * s / n;
    const double v = 2.0 * std::hypot(amp_c, amp_s);
    // Delta method on V = 2 sqrt(ac^2 + as^2).
    double se = 0.0;
    if (v > 1e-300) {
        const double dc = 4.0 * amp_c / v * (2.0 / n);
        const double ds = 4.0 * amp_s / v * (2.0 / n);
        se = std::sqrt(dc * dc * var_c + ds * ds * var_s);
    } else {
        se = 4.0 / n * std::sqrt(var_c + var_s);
    }
    return {v, se};
}

namespace {

double fit_log_linear(const std::vector<double>& t, const std::vector<Estimate>& y) {
    // Weighted LS of log y = log a - slope * t; returns slope.
    double sw = 0.0, st = 0.0, sl = 0.0, stt = 0.0, stl = 0.0;
    int used = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (y[i].value <= 0.0) continue;
        const double ly = std::log(y[i].value);
        const double sigma = y[i].stderr > 0.0 ? y[i].stderr / y[i].value : 1e-3;
        const double w = 1.0 / (sigma * sigma);
        sw += w;
        st += w * t[i];
        sl += w * ly;
        stt += w * t[i] * t[i];
        stl += w * t[i] * ly;
        ++used;
    }
    if (used < 2) throw InvalidParameterError("decay fit needs >= 2 usable points");
    const double denom = sw * stt - st * st;
    if (std::abs(denom) < 1e-300) throw InvalidParameterError("degenerate decay fit");
    return -(sw * stl - st * sl) / denom;
}

} // namespace

double fit_exponential_decay(const std::vector<double>& x, const std::vector<Estimate>& y) {
    if (x.size() != y.size()) throw InvalidParameterError("fit input size mismatch");
    const double slope = fit_log_linear(x, y);
    if (slope <= 0.0) throw InvalidParameterError("non-decaying exponential fit");
    return 1.0 / slope;
}

double fit_gaussian_decay(const std::vector<double>& x, const std::vector<Estimate>& y) {
    if (x.size() != y.size()) throw InvalidParameterError("fit input size mismatch");
    std::vector<double> x2(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) x2[i] = x[i] * x[i];
    const double slope = fit_log_linear(x2, y);
    if (slope <= 0.0) throw InvalidParameterError("non-decaying Gaussian fit");
    return 1.0 / std::sqrt(slope);
}

} // namespace photospin
