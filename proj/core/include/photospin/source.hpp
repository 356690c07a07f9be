#pragma once

#include "photospin/channel.hpp"
#include "photospin/state.hpp"

namespace photospin {

/// Parameters of the quantum-dot spin-photon source.
struct SourceParams {
    /// Probability the spin starts in |up> instead of |down>.
    double init_error = 0.0;
    /// Weight of the re-excitation admixture (frequency coherence destroyed,
    /// classical spin-frequency correlation kept).
    double reexcitation_weight = 0.0;
    /// Frequency-bin separation between |w_red> and |w_blue>.
    double zeeman_splitting_ghz = 18.0;
    /// Excitation pulse width; metadata only, not used by the dynamics.
    double excitation_pulse_width_ps = 400.0;

    void validate() const;
};

/// The ideal spin-photon resource (|down,w_red> - |up,w_blue>)/sqrt(2)
/// on labels {Spin, Frequency}.
LabeledState ideal_entangled_pair();

/// Resource state with initialization and re-excitation imperfections:
///   rho = (1-w) rho_init + w Deph_freq(rho_init)
/// where rho_init mixes the ideal pair with its spin-flipped branch with
/// weight init_error, and Deph_freq kills the frequency-bin coherence.
/// Fidelity to the ideal pair drops by w/2 when init_error = 0.
LabeledState generate_entangled_pair(const SourceParams& p);

/// Rank-1 projector on Polarization onto (|H> - i|V>)/sqrt(2), the
/// projection performed by the crossed polarizers at collection.
QuantumChannel crossed_polarizer_projection();

/// Fully frequency-dephased version of a {Spin, Frequency} state
/// (projects onto the two bin populations; spin marginal preserved).
LabeledState dephase_frequency(const LabeledState& state);

} // namespace photospin
