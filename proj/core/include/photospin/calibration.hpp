#pragma once

#include "photospin/protocol.hpp"

namespace photospin {

/// Published anchor values the noise model is calibrated against.
struct CalibrationTargets {
    /// Resource fidelity drop attributed to re-excitation by the pump pulse.
    double reexcitation_drop = 0.068;
    /// Correlated-basis population fidelity of the verification data.
    double f_zz = 0.942;
    /// Coherent-basis visibilities of the verification data.
    double v_xx = 0.609;
    double v_yy = 0.690;
    /// Pole-target transfer fidelity.
    double f_h = 0.851;
};

/// Solved knobs, in closed form from the model structure:
///   reexcitation_weight  w   = 2 * drop                (fidelity 1 - w/2)
///   init_error           e   = 1 - f_zz                (population flips)
///   meas_delay_ns        tau from exp(-(tau/T2*)^2) =
///                              vbar / ((1-w)(1-e)),  vbar = (v_xx+v_yy)/2
///   analyzer_error       m   = 1 - (2 f_h - 1)/(1 - 2e)
struct CalibrationSolution {
    double reexcitation_weight = 0.0;
    double init_error = 0.0;
    double meas_delay_ns = 0.0;
    double analyzer_error = 0.0;
};

CalibrationSolution solve_calibration(const CalibrationTargets& targets,
                                      double t2_star_ns = 1.7);

/// Noise model with every knob at its calibrated default: T2* = 1.7 ns,
/// T2 = 2.7 us, 18 GHz bin splitting, 1.0 GHz etalons, 38 ns echo storage,
/// and the solved source/measurement errors above.
NoiseModel calibrated_noise_model(const CalibrationTargets& targets = {});

} // namespace photospin
