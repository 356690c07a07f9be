#include "photospin/calibration.hpp"

#include <cmath>

#include "photospin/errors.hpp"

namespace photospin {

CalibrationSolution solve_calibration(const CalibrationTargets& t, double t2_star_ns) {
    if (t.f_zz <= 0.5 || t.f_zz > 1.0 || t.f_h <= 0.5 || t.f_h > 1.0) {
        throw InvalidParameterError("calibration anchors outside the model's range");
    }
    CalibrationSolution s;
    s.reexcitation_weight = 2.0 * t.reexcitation_drop;
    s.init_error = 1.0 - t.f_zz;

    // Mean coherent-basis visibility the model must reproduce. Re-excitation
    // scales both visibilities by (1-w); the initialization flip branch
    // keeps the XX correlation and inverts YY, so the pair averages to a
    // factor (1-e); the rest is quasi-static dephasing over the effective
    // readout delay.
    const double vbar = 0.5 * (t.v_xx + t.v_yy);
    const double envelope =
        vbar / ((1.0 - s.reexcitation_weight) * (1.0 - s.init_error));
    if (envelope <= 0.0 || envelope >= 1.0) {
        throw InvalidParameterError("visibility anchors incompatible with source errors");
    }
    s.meas_delay_ns = t2_star_ns * std::sqrt(-std::log(envelope));

    // Pole-target transfer: initialization flips give a Bloch-z factor
    // (1-2e); uniform detector misassignment shrinks every axis by (1-m).
    const double bloch_z = 1.0 - 2.0 * s.init_error;
    const double needed = (2.0 * t.f_h - 1.0) / bloch_z;
    if (needed <= 0.0 || needed > 1.0) {
        throw InvalidParameterError("transfer anchor incompatible with init error");
    }
    s.analyzer_error = 1.0 - needed;
    return s;
}

NoiseModel calibrated_noise_model(const CalibrationTargets& targets) {
    NoiseModel n;
    n.spin.t2_star_ns = 1.7;
    n.spin.t2_echo_us = 2.7;
    n.spin.readout_fidelity = 1.0;
    n.source.zeeman_splitting_ghz = 18.0;
    n.etalon_t = EtalonSpec{-9.0, 1.0, EtalonModel::IdealProjector};
    n.etalon_r = EtalonSpec{9.0, 1.0, EtalonModel::IdealProjector};
    n.storage_span_ns = 38.0;
    n.storage_echo = true;

    const auto sol = solve_calibration(targets, n.spin.t2_star_ns);
    n.source.init_error = sol.init_error;
    n.source.reexcitation_weight = sol.reexcitation_weight;
    n.meas_delay_ns = sol.meas_delay_ns;
    n.analyzer_error = sol.analyzer_error;
    return n;
}

} // namespace photospin
