#include "photospin/optics.hpp"

#include <cmath>

#include "photospin/errors.hpp"
#include "photospin/math.hpp"

namespace photospin {

void EtalonSpec::validate() const {
    if (fwhm_ghz <= 0.0) throw InvalidParameterError("etalon fwhm must be positive");
}

void TargetState::validate() const {
    const double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > 1e-12) {
        throw InvalidParameterError("target state amplitudes not normalized");
    }
}

Vector TargetState::ket() const {
    Vector v(2);
    v << alpha, beta;
    return v;
}

TargetState TargetState::h() { return {Complex(1, 0), Complex(0, 0)}; }

TargetState TargetState::d_plus() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Complex(r, 0), Complex(r, 0)};
}

TargetState TargetState::sigma_plus() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Complex(r, 0), Complex(0, r)};
}

namespace {

double leakage_amplitude(const EtalonSpec& e, double wrong_bin_detuning_ghz) {
    e.validate();
    if (e.model == EtalonModel::IdealProjector) return 0.0;
    return std::sqrt(lorentzian_transmission(wrong_bin_detuning_ghz, e.fwhm_ghz));
}

} // namespace

Matrix correlation_operator(const EtalonSpec& etalon_t, const EtalonSpec& etalon_r,
                            double bin_separation_ghz) {
    if (bin_separation_ghz <= 0.0) {
        throw InvalidParameterError("bin separation must be positive");
    }
    // T-path etalon sits on the red bin, R-path etalon on the blue bin; the
    // wrong bin is detuned by the full bin separation.
    const double leak_t = leakage_amplitude(etalon_t, bin_separation_ghz);
    const double leak_r = leakage_amplitude(etalon_r, bin_separation_ghz);

    // Map on (Frequency, Polarization, Path), input arrives as |f, H, T>:
    //   |red,H,T>  -> (|red,H,T>  + leak_r |red,V,R>)  / sqrt(1 + leak_r^2)
    //   |blue,H,T> -> (|blue,V,R> + leak_t |blue,H,T>) / sqrt(1 + leak_t^2)
    // The deterministic splitter preparation loss lives in the loss budget,
    // so each branch is renormalized here. Indices: freq(4) | pol(2) | path(1).
    Matrix m = Matrix::Zero(8, 8);
    const double nr = 1.0 / std::sqrt(1.0 + leak_r * leak_r);
    const double nb = 1.0 / std::sqrt(1.0 + leak_t * leak_t);
    m(0, 0) = nr;           // red,H,T stays
    m(3, 0) = leak_r * nr;  // red leaking through the R-path etalon
    m(7, 4) = nb;           // blue,H,T -> blue,V,R
    m(4, 4) = leak_t * nb;  // blue leaking through the T-path etalon
    return m;
}

Matrix r_path_flip_operator() {
    Matrix flip = Matrix::Zero(4, 4); // (Polarization, Path)
    flip(0, 0) = 1; // H,T
    flip(2, 2) = 1; // V,T
    flip(1, 3) = 1; // V,R -> H,R
    flip(3, 1) = 1; // H,R -> V,R
    return flip;
}

LabeledState correlate_dofs(const LabeledState& state, const EtalonSpec& etalon_t,
                            const EtalonSpec& etalon_r, double bin_separation_ghz) {
    if (!state.has_label(Dof::Frequency)) {
        throw LabelMismatchError("correlate_dofs input must carry Frequency");
    }
    if (state.has_label(Dof::Polarization) || state.has_label(Dof::Path)) {
        throw LabelMismatchError("correlate_dofs adjoins Polarization and Path itself");
    }
    // Fresh labels; their content is replaced by the correlation map.
    Vector h(2), t(2);
    h << 1, 0;
    t << 1, 0;
    auto full = tensor(tensor(state, LabeledState::pure({Dof::Polarization}, h)),
                       LabeledState::pure({Dof::Path}, t));
    const auto corr = QuantumChannel::attenuation(
        {Dof::Frequency, Dof::Polarization, Dof::Path},
        correlation_operator(etalon_t, etalon_r, bin_separation_ghz));
    return apply(full, corr);
}

LabeledState encode_target(const LabeledState& state, const TargetState& t) {
    t.validate();
    for (Dof d : {Dof::Frequency, Dof::Polarization, Dof::Path}) {
        if (!state.has_label(d)) {
            throw LabelMismatchError("encode_target input must carry " + to_string(d));
        }
    }

    // R-path half-wave plate: swap H/V on the reflected path only.
    auto out = apply(state, QuantumChannel::unitary({Dof::Polarization, Dof::Path},
                                                    r_path_flip_operator()));

    // Identical wave-plate pair on both paths prepares the target.
    out = apply(out, QuantumChannel::unitary({Dof::Polarization},
                                             polarization_preparation(t)));
    return out;
}

Matrix waveplate_jones(const WavePlateSetting& w) {
    const double g = (w.kind == WavePlateKind::Half) ? M_PI : M_PI / 2.0;
    const double c = std::cos(w.angle_rad), s = std::sin(w.angle_rad);
    Matrix rot(2, 2), ret(2, 2);
    rot << c, -s, s, c;
    ret << 1.0, 0.0, 0.0, std::exp(Complex(0.0, -g));
    return rot * ret * rot.transpose();
}

QuantumChannel waveplate_channel(const WavePlateSetting& w) {
    return QuantumChannel::unitary({Dof::Polarization}, waveplate_jones(w));
}

Matrix polarization_preparation(const TargetState& t) {
    Matrix u(2, 2);
    u << t.alpha, -std::conj(t.beta), t.beta, std::conj(t.alpha);
    return u;
}

} // namespace photospin
