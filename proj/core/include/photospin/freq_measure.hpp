#pragma once

#include <utility>

#include "photospin/channel.hpp"
#include "photospin/state.hpp"

namespace photospin {

/// Settings of the phase-locked electro-optic modulator + etalon module that
/// measures the frequency qubit in a superposition basis.
struct EomSettings {
    /// RF drive frequency; half the bin separation so the inner sidebands
    /// of the two bins overlap.
    double modulation_freq_ghz = 9.0;
    /// Phase-modulation index beta_m. Default solves J_1(beta)^2 = 0.3.
    double modulation_depth = 1.433349;
    /// Phase of the RF drive (the basis knob).
    double rf_phase_rad = 0.0;
    /// Calibration offset theta_0 in theta = slope * phi + theta_0.
    double phase_offset_rad = 0.0;
    /// +2 or -2; the two first-order sidebands move oppositely, so the
    /// interference phase advances at twice the RF phase.
    int rf_slope = 2;
    /// Retained sideband order n; the overlapped-peak power fraction is
    /// J_n(beta_m)^2.
    int sideband_order = 1;

    void validate() const;
    /// Measurement phase theta(phi) = slope * rf_phase + phase_offset.
    double measurement_phase() const;
};

enum class FreqBasis { Z, X, Y };

/// Projector on Frequency onto (|w_red> + e^{i theta}|w_blue>)/sqrt(2) and
/// the sideband power fraction J_n(beta_m)^2 kept by the etalon (a rate
/// factor; it never biases the post-selected state).
std::pair<QuantumChannel, double> frequency_projector(const EomSettings& e);

/// Outcome probabilities (p0, p1) of a frequency-basis measurement; sums to
/// the heralded trace of `state`. Z uses the bin projectors, X the
/// projector pair at theta in {0, pi}, Y at {pi/2, 3pi/2}.
std::pair<double, double> measure_frequency_basis(const LabeledState& state, FreqBasis basis);

/// Projector pair of a frequency basis (outcome 0, outcome 1).
std::pair<QuantumChannel, QuantumChannel> frequency_basis_projectors(FreqBasis basis);

/// Projector onto (|w_red> + e^{i theta}|w_blue>)/sqrt(2) at explicit theta.
QuantumChannel frequency_phase_projector(double theta);

} // namespace photospin
