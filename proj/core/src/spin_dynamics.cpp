#include "photospin/spin_dynamics.hpp"

#include <cmath>
#include <limits>

#include "photospin/errors.hpp"

namespace photospin {

void SpinParams::validate() const {
    if (t2_star_ns <= 0.0) throw InvalidParameterError("t2_star_ns must be positive");
    if (t2_echo_us <= 0.0) throw InvalidParameterError("t2_echo_us must be positive");
    if (t2_echo_ns() < t2_star_ns) {
        throw InvalidParameterError("t2_echo must exceed t2_star");
    }
    if (readout_fidelity < 0.0 || readout_fidelity > 1.0) {
        throw InvalidParameterError("readout_fidelity outside [0, 1]");
    }
}

double SpinParams::detuning_sigma_ghz() const {
    if (!std::isfinite(t2_star_ns)) return 0.0;
    return std::sqrt(2.0) / (2.0 * M_PI * t2_star_ns);
}

void PulseEvent::validate() const {
    const double n = std::sqrt(axis_x * axis_x + axis_y * axis_y + axis_z * axis_z);
    if (std::abs(n - 1.0) > 1e-12) {
        throw InvalidParameterError("pulse axis must be a unit vector");
    }
}

void PulseSequence::validate() const {
    double prev = -std::numeric_limits<double>::infinity();
    for (const auto& e : events) {
        e.validate();
        if (e.time_ns < prev) {
            throw UnsortedSequenceError("pulse times must be non-decreasing");
        }
        prev = e.time_ns;
    }
    if (!events.empty() && total_span_ns < events.back().time_ns) {
        throw InvalidParameterError("total_span_ns smaller than last pulse time");
    }
}

PulseSequence PulseSequence::ramsey(double delay_ns, double readout_phase_rad) {
    PulseSequence s;
    s.events.push_back({0.0, 1.0, 0.0, 0.0, M_PI / 2.0});
    s.events.push_back({delay_ns, std::cos(readout_phase_rad), std::sin(readout_phase_rad),
                        0.0, M_PI / 2.0});
    s.total_span_ns = delay_ns;
    return s;
}

PulseSequence PulseSequence::echo(double total_span_ns, double readout_phase_rad) {
    PulseSequence s;
    s.events.push_back({0.0, 1.0, 0.0, 0.0, M_PI / 2.0});
    s.events.push_back({total_span_ns / 2.0, 1.0, 0.0, 0.0, M_PI});
    s.events.push_back({total_span_ns, std::cos(readout_phase_rad),
                        std::sin(readout_phase_rad), 0.0, M_PI / 2.0});
    s.total_span_ns = total_span_ns;
    return s;
}

PulseSequence PulseSequence::storage_echo(double total_span_ns) {
    PulseSequence s;
    s.events.push_back({total_span_ns / 2.0, 1.0, 0.0, 0.0, M_PI});
    s.total_span_ns = total_span_ns;
    return s;
}

Matrix precession(double freq_ghz, double time_ns) {
    const double phi = 2.0 * M_PI * freq_ghz * time_ns;
    Matrix u = Matrix::Zero(2, 2);
    u(0, 0) = std::polar(1.0, phi / 2.0);
    u(1, 1) = std::polar(1.0, -phi / 2.0);
    return u;
}

QuantumChannel phase_damping(double time_ns, double t2_ns) {
    const double decay = std::isfinite(t2_ns) ? std::exp(-time_ns / t2_ns) : 1.0;
    const double lambda = 1.0 - decay * decay;
    Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = decay;
    k1(1, 1) = std::sqrt(lambda);
    return QuantumChannel::cptp({Dof::Spin}, {k0, k1});
}

QuantumChannel gaussian_dephasing(double time_ns, double t2_star_ns) {
    const double ratio = time_ns / t2_star_ns;
    const double decay = std::exp(-ratio * ratio);
    const double lambda = 1.0 - decay * decay;
    Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k0(1, 1) = decay;
    k1(1, 1) = std::sqrt(lambda);
    return QuantumChannel::cptp({Dof::Spin}, {k0, k1});
}

namespace {

LabeledState free_segment(const LabeledState& state, double dt_ns, const SpinParams& p,
                          double detuning_ghz) {
    if (dt_ns <= 0.0) return state;
    auto out = apply(state, QuantumChannel::unitary(
                                {Dof::Spin},
                                precession(p.larmor_freq_ghz + detuning_ghz, dt_ns)));
    return apply(out, phase_damping(dt_ns, p.t2_echo_ns()));
}

} // namespace

LabeledState evolve(const LabeledState& state, const PulseSequence& seq,
                    const SpinParams& p, double detuning_ghz) {
    if (!state.has_label(Dof::Spin)) {
        throw LabelMismatchError("evolve requires a Spin label");
    }
    p.validate();
    seq.validate();

    LabeledState out = state;
    double now = 0.0;
    for (const auto& e : seq.events) {
        out = free_segment(out, e.time_ns - now, p, detuning_ghz);
        now = e.time_ns;
        const double angle = e.angle_rad * (1.0 + p.rotation_error);
        out = apply(out, QuantumChannel::unitary(
                             {Dof::Spin}, rotation(e.axis_x, e.axis_y, e.axis_z, angle)));
    }
    out = free_segment(out, seq.total_span_ns - now, p, detuning_ghz);
    return out;
}

double sample_detuning(const SpinParams& p, Rng& rng) {
    return p.detuning_sigma_ghz() * rng.gaussian();
}

int readout(const LabeledState& state, const SpinParams& p, Rng& rng) {
    const int spin_slot = state.label_index(Dof::Spin);
    const int n = state.num_labels();
    const int dim = state.dim();
    double p_up = 0.0;
    const double tr = state.trace();
    for (int i = 0; i < dim; ++i) {
        if ((i >> (n - 1 - spin_slot)) & 1) p_up += state.matrix()(i, i).real();
    }
    if (tr < 1e-14) throw InvalidStateError("readout of zero-trace state");
    int bit = rng.bernoulli(p_up / tr) ? 1 : 0;
    if (!rng.bernoulli(p.readout_fidelity)) bit ^= 1;
    return bit;
}

Matrix spin_basis_rotation(SpinBasis basis, const SpinParams& p, double elapsed_ns) {
    // Undo the deterministic larmor phase, then map the basis onto Z.
    const Matrix unwind = precession(-p.larmor_freq_ghz, elapsed_ns);
    Matrix map = identity2();
    switch (basis) {
        case SpinBasis::Z:
            break;
        case SpinBasis::X:
            // -pi/2 about y: |x+> -> |0>
            map = rotation(0.0, 1.0, 0.0, -M_PI / 2.0);
            break;
        case SpinBasis::Y:
            // +pi/2 about x: |y+> -> |0>
            map = rotation(1.0, 0.0, 0.0, M_PI / 2.0);
            break;
    }
    return map * unwind;
}

} // namespace photospin
