#include "photospin/math.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "photospin/errors.hpp"

namespace photospin {

double bessel_j(int order, double x) {
    if (order < 0) throw InvalidParameterError("bessel_j order must be >= 0");
    const double half = x / 2.0;
    double term = 1.0;
    for (int i = 1; i <= order; ++i) term *= half / i;
    double sum = term;
    for (int k = 1; k < 80; ++k) {
        term *= -(half * half) / (k * (k + order));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum) + 1e-300) break;
    }
    return sum;
}

double solve_modulation_depth(double target_efficiency, int order) {
    if (target_efficiency <= 0.0 || target_efficiency >= 1.0) {
        throw InvalidParameterError("target efficiency must lie in (0, 1)");
    }
    // Scan for the first maximum of J_n^2, then bisect on the rising branch.
    double peak_x = 0.0, peak = 0.0;
    for (double x = 0.0; x <= 12.0; x += 1e-3) {
        const double v = bessel_j(order, x);
        if (v * v > peak) {
            peak = v * v;
            peak_x = x;
        } else if (v * v < peak * 0.5 && peak > 0.0) {
            break;
        }
    }
    if (target_efficiency > peak) {
        throw InvalidParameterError("requested sideband efficiency exceeds J_n^2 maximum");
    }
    double lo = 0.0, hi = peak_x;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = bessel_j(order, mid);
        if (v * v < target_efficiency) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double lorentzian_transmission(double detuning_ghz, double fwhm_ghz) {
    if (fwhm_ghz <= 0.0) throw InvalidParameterError("etalon fwhm must be positive");
    const double r = 2.0 * detuning_ghz / fwhm_ghz;
    return 1.0 / (1.0 + r * r);
}

GaussHermite gauss_hermite(int n) {
    // Golub-Welsch on the Hermite Jacobi matrix, rescaled so nodes/weights
    // integrate against the standard normal density.
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    for (int i = 1; i < n; ++i) {
        const double b = std::sqrt(i / 2.0);
        j(i - 1, i) = b;
        j(i, i - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
    GaussHermite gh;
    gh.nodes.resize(n);
    gh.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        gh.nodes[i] = es.eigenvalues()[i] * std::sqrt(2.0);
        const double v0 = es.eigenvectors()(0, i);
        gh.weights[i] = v0 * v0;
    }
    return gh;
}

} // namespace photospin
