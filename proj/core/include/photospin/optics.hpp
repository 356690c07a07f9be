#pragma once

#include "photospin/channel.hpp"
#include "photospin/state.hpp"

namespace photospin {

/// Etalon filter model. IdealProjector blocks the wrong frequency bin
/// completely; LorentzianLeakage passes it with amplitude sqrt(L) where
/// L is the Lorentzian power transmission at the bin separation.
enum class EtalonModel {
    IdealProjector,
    LorentzianLeakage,
};

struct EtalonSpec {
    /// Passband center, GHz offset from the midpoint between the bins.
    double center_ghz = 0.0;
    double fwhm_ghz = 1.0;
    EtalonModel model = EtalonModel::IdealProjector;

    void validate() const;
};

enum class WavePlateKind { Half, Quarter };

struct WavePlateSetting {
    WavePlateKind kind = WavePlateKind::Half;
    /// Fast-axis angle from H, radians.
    double angle_rad = 0.0;
};

/// Target polarization qubit alpha|H> + beta|V>, |alpha|^2 + |beta|^2 = 1.
struct TargetState {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};

    void validate() const;
    Vector ket() const;

    static TargetState h();        // |H>
    static TargetState d_plus();   // (|H> + |V>)/sqrt(2)
    static TargetState sigma_plus(); // (|H> + i|V>)/sqrt(2)
};

/// Correlates the frequency bin with polarization and path:
/// |w_red> -> |w_red>|H>|T>, |w_blue> -> |w_blue>|V>|R>. Adjoins fresh
/// Polarization and Path labels internally. With LorentzianLeakage, the
/// wrong-bin branch survives with relative amplitude sqrt(L) at a detuning
/// equal to the bin separation. The deterministic polarization-preparation
/// loss of the physical splitter is an apparatus efficiency (loss budget),
/// not a state-trace factor, so the ideal map is an exact isometry.
LabeledState correlate_dofs(const LabeledState& state, const EtalonSpec& etalon_t,
                            const EtalonSpec& etalon_r, double bin_separation_ghz = 18.0);

/// Applies the R-path half-wave plate (V -> H, disentangling polarization)
/// followed by identical wave-plate pairs on both paths that prepare the
/// target polarization. Input must carry {Frequency, Polarization, Path}.
LabeledState encode_target(const LabeledState& state, const TargetState& t);

/// Jones operator of a wave plate as a Polarization channel.
/// Half at angle a maps H -> cos(2a) H + sin(2a) V; retardance pi (Half)
/// or pi/2 (Quarter).
QuantumChannel waveplate_channel(const WavePlateSetting& w);

/// Jones matrix of the wave plate (2x2, unitary).
Matrix waveplate_jones(const WavePlateSetting& w);

/// Unitary that prepares t.ket() from |H> (the combined wave-plate pair).
Matrix polarization_preparation(const TargetState& t);

/// 8x8 operator on (Frequency, Polarization, Path) implementing the
/// splitter + etalon correlation (inputs arrive as |f, H, T>).
Matrix correlation_operator(const EtalonSpec& etalon_t, const EtalonSpec& etalon_r,
                            double bin_separation_ghz);

/// 4x4 unitary on (Polarization, Path): half-wave plate in the R path only.
Matrix r_path_flip_operator();

} // namespace photospin
