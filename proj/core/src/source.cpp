#include "photospin/source.hpp"

#include <cmath>

#include "photospin/errors.hpp"

namespace photospin {

void SourceParams::validate() const {
    if (init_error < 0.0 || init_error > 1.0) {
        throw InvalidParameterError("init_error outside [0, 1]");
    }
    if (reexcitation_weight < 0.0 || reexcitation_weight > 1.0) {
        throw InvalidParameterError("reexcitation_weight outside [0, 1]");
    }
    if (zeeman_splitting_ghz <= 0.0) {
        throw InvalidParameterError("zeeman_splitting_ghz must be positive");
    }
}

LabeledState ideal_entangled_pair() {
    Vector amp(4);
    const double r = 1.0 / std::sqrt(2.0);
    amp << r, 0.0, 0.0, -r; // |down,red> - |up,blue>
    return LabeledState::pure({Dof::Spin, Dof::Frequency}, amp);
}

namespace {

LabeledState flipped_entangled_pair() {
    Vector amp(4);
    const double r = 1.0 / std::sqrt(2.0);
    amp << 0.0, -r, r, 0.0; // |up,red> - |down,blue>
    return LabeledState::pure({Dof::Spin, Dof::Frequency}, amp);
}

} // namespace

LabeledState dephase_frequency(const LabeledState& state) {
    Vector red(2), blue(2);
    red << 1, 0;
    blue << 0, 1;
    const auto p_red = QuantumChannel::projector({Dof::Frequency}, ket_projector(red));
    const auto p_blue = QuantumChannel::projector({Dof::Frequency}, ket_projector(blue));
    const auto a = apply(state, p_red);
    const auto b = apply(state, p_blue);
    return LabeledState::density(state.labels(), a.matrix() + b.matrix());
}

LabeledState generate_entangled_pair(const SourceParams& p) {
    p.validate();
    const auto ideal = ideal_entangled_pair();
    const auto flipped = flipped_entangled_pair();
    Matrix rho_init = (1.0 - p.init_error) * ideal.matrix() + p.init_error * flipped.matrix();
    auto init = LabeledState::density(ideal.labels(), rho_init);
    const auto dephased = dephase_frequency(init);
    const double w = p.reexcitation_weight;
    return LabeledState::density(ideal.labels(),
                                 (1.0 - w) * init.matrix() + w * dephased.matrix());
}

QuantumChannel crossed_polarizer_projection() {
    Vector ket(2);
    ket << Complex(1.0, 0.0), Complex(0.0, -1.0); // |H> - i|V>
    return QuantumChannel::projector({Dof::Polarization}, ket_projector(ket));
}

} // namespace photospin
