#pragma once

#include <vector>

#include "photospin/channel.hpp"
#include "photospin/rng.hpp"
#include "photospin/state.hpp"

namespace photospin {

struct SpinParams {
    double t2_star_ns = 1.7;
    double t2_echo_us = 2.7;
    /// Mean precession frequency in the simulation frame. Zero means the
    /// rotating frame; a nonzero value is compensated by the readout basis
    /// rotation, so physics outputs do not depend on it.
    double larmor_freq_ghz = 0.0;
    double readout_fidelity = 1.0;
    /// Fractional angle error of every rotation pulse.
    double rotation_error = 0.0;

    void validate() const;
    double t2_echo_ns() const { return t2_echo_us * 1e3; }
    /// Std deviation of the quasi-static Overhauser detuning (GHz), chosen so
    /// the ensemble Ramsey envelope is exp(-(t/T2*)^2). Zero if T2* = inf.
    double detuning_sigma_ghz() const;
};

struct PulseEvent {
    double time_ns = 0.0;
    double axis_x = 1.0, axis_y = 0.0, axis_z = 0.0;
    double angle_rad = 0.0;

    void validate() const;
};

struct PulseSequence {
    std::vector<PulseEvent> events;
    double total_span_ns = 0.0;

    void validate() const;

    /// pi/2(x) - t - pi/2(axis at phase readout_phase in the equator).
    static PulseSequence ramsey(double delay_ns, double readout_phase_rad = 0.0);
    /// pi/2(x) - T/2 - pi(x) - T/2 - pi/2(phase); the refocusing sequence.
    static PulseSequence echo(double total_span_ns, double readout_phase_rad = 0.0);
    /// Just the refocusing pi(x) at the midpoint (entangled-state storage).
    static PulseSequence storage_echo(double total_span_ns);
};

/// Alternates free precession at (larmor + detuning) with instantaneous
/// rotations, applying exponential phase damping exp(-t/T2) throughout.
/// `detuning_ghz` is the per-trial quasi-static Overhauser sample.
LabeledState evolve(const LabeledState& state, const PulseSequence& seq,
                    const SpinParams& p, double detuning_ghz);

/// One quasi-static detuning draw (GHz).
double sample_detuning(const SpinParams& p, Rng& rng);

/// Samples the |up> population, then flips with probability
/// 1 - readout_fidelity. Basis changes are pre-rotations (see spin_basis_rotation).
int readout(const LabeledState& state, const SpinParams& p, Rng& rng);

/// Spin measurement bases; eigenstates follow the usual conventions with
/// |0> = |down>:  X: (|down>+|up>)/sqrt(2),  Y: (|down>+i|up>)/sqrt(2).
enum class SpinBasis { Z, X, Y };

/// Rotation mapping `basis` eigenstates onto Z eigenstates, compensating the
/// deterministic larmor phase accumulated over `elapsed_ns`.
Matrix spin_basis_rotation(SpinBasis basis, const SpinParams& p, double elapsed_ns);

/// Free-precession phase unitary exp(-i phi sigma_z / 2) with
/// phi = 2 pi f t (f in GHz, t in ns).
Matrix precession(double freq_ghz, double time_ns);

/// Phase damping with off-diagonal factor exp(-t/T2) as a CPTP channel.
QuantumChannel phase_damping(double time_ns, double t2_ns);

/// Deterministic channel equal to the Gaussian quasi-static ensemble average
/// of free precession over `time_ns` (off-diagonals shrink by
/// exp(-(t/T2*)^2)); the exact-engine counterpart of sample_detuning.
QuantumChannel gaussian_dephasing(double time_ns, double t2_star_ns);

} // namespace photospin
