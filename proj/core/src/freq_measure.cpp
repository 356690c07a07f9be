#include "photospin/freq_measure.hpp"

#include <cmath>

#include "photospin/errors.hpp"
#include "photospin/math.hpp"

namespace photospin {

void EomSettings::validate() const {
    if (modulation_freq_ghz <= 0.0) {
        throw InvalidParameterError("modulation_freq_ghz must be positive");
    }
    if (modulation_depth < 0.0) {
        throw InvalidParameterError("modulation_depth must be non-negative");
    }
    if (rf_slope != 2 && rf_slope != -2) {
        throw InvalidParameterError("rf_slope must be +2 or -2");
    }
    if (sideband_order < 1) {
        throw InvalidParameterError("sideband_order must be >= 1");
    }
}

double EomSettings::measurement_phase() const {
    return rf_slope * rf_phase_rad + phase_offset_rad;
}

QuantumChannel frequency_phase_projector(double theta) {
    Vector ket(2);
    const double r = 1.0 / std::sqrt(2.0);
    ket << Complex(r, 0.0), std::polar(r, theta);
    return QuantumChannel::projector({Dof::Frequency}, ket_projector(ket));
}

std::pair<QuantumChannel, double> frequency_projector(const EomSettings& e) {
    e.validate();
    const double j = bessel_j(e.sideband_order, e.modulation_depth);
    return {frequency_phase_projector(e.measurement_phase()), j * j};
}

std::pair<QuantumChannel, QuantumChannel> frequency_basis_projectors(FreqBasis basis) {
    switch (basis) {
        case FreqBasis::Z: {
            Vector red(2), blue(2);
            red << 1, 0;
            blue << 0, 1;
            return {QuantumChannel::projector({Dof::Frequency}, ket_projector(red)),
                    QuantumChannel::projector({Dof::Frequency}, ket_projector(blue))};
        }
        case FreqBasis::X:
            return {frequency_phase_projector(0.0), frequency_phase_projector(M_PI)};
        case FreqBasis::Y:
            return {frequency_phase_projector(M_PI / 2.0),
                    frequency_phase_projector(3.0 * M_PI / 2.0)};
    }
    throw InvalidParameterError("unknown frequency basis");
}

std::pair<double, double> measure_frequency_basis(const LabeledState& state, FreqBasis basis) {
    if (!state.has_label(Dof::Frequency)) {
        throw LabelMismatchError("state has no Frequency label");
    }
    const auto [p0, p1] = frequency_basis_projectors(basis);
    return {apply(state, p0).trace(), apply(state, p1).trace()};
}

} // namespace photospin
