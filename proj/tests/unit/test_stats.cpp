#include <doctest.h>

#include <cmath>

#include "photospin/errors.hpp"
#include "photospin/stats.hpp"

using namespace photospin;

TEST_CASE("binomial estimates") {
    const auto e = binomial_estimate(250, 1000);
    CHECK(e.value == doctest::Approx(0.25));
    CHECK(e.stderr == doctest::Approx(std::sqrt(0.25 * 0.75 / 1000)).epsilon(1e-12));
    CHECK(binomial_estimate(0, 0).value == 0.0);
    CHECK(binomial_stderr(1000, 1000) == 0.0);
}

TEST_CASE("visibility extraction from a clean fringe") {
    const int n = 24;
    std::vector<double> phases;
    std::vector<Estimate> probs;
    for (int i = 0; i < n; ++i) {
        const double phi = 2.0 * M_PI * i / n;
        phases.push_back(phi);
        probs.push_back({0.5 * (1.0 + 0.73 * std::cos(2.0 * phi + 0.4)), 0.01});
    }
    const auto v = fit_visibility(phases, probs, 2);
    CHECK(v.value == doctest::Approx(0.73).epsilon(1e-10));
    CHECK(v.stderr > 0.0);
    // wrong harmonic sees nothing
    CHECK(fit_visibility(phases, probs, 1).value == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("exponential decay fit recovers tau") {
    std::vector<double> x;
    std::vector<Estimate> y;
    for (double t = 100.0; t <= 2000.0; t += 250.0) {
        x.push_back(t);
        y.push_back({0.95 * std::exp(-t / 620.0), 0.01});
    }
    CHECK(fit_exponential_decay(x, y) == doctest::Approx(620.0).epsilon(1e-9));
}

TEST_CASE("gaussian decay fit recovers tau") {
    std::vector<double> x;
    std::vector<Estimate> y;
    for (double t = 0.2; t <= 2.6; t += 0.3) {
        x.push_back(t);
        y.push_back({std::exp(-(t / 1.7) * (t / 1.7)), 0.005});
    }
    CHECK(fit_gaussian_decay(x, y) == doctest::Approx(1.7).epsilon(1e-9));
}

TEST_CASE("fit input validation") {
    std::vector<double> x{1.0, 2.0};
    std::vector<Estimate> y{{0.5, 0.01}};
    CHECK_THROWS_AS(fit_exponential_decay(x, y), InvalidParameterError);
    CHECK_THROWS_AS(fit_visibility({0.0, 1.0}, {{0.5, 0.1}, {0.5, 0.1}}, 1),
                    InvalidParameterError);
    // growing "decay"
    std::vector<double> xg{1.0, 2.0, 3.0};
    std::vector<Estimate> yg{{0.1, 0.01}, {0.2, 0.01}, {0.4, 0.01}};
    CHECK_THROWS_AS(fit_exponential_decay(xg, yg), InvalidParameterError);
}
