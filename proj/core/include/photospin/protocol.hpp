#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "photospin/freq_measure.hpp"
#include "photospin/optics.hpp"
#include "photospin/source.hpp"
#include "photospin/spin_dynamics.hpp"
#include "photospin/stats.hpp"

namespace photospin {

enum class Engine { Exact, MonteCarlo };

/// Whether Pauli feedback is applied as a channel on the spin state or
/// folded into the readout interpretation (the data post-processing used in
/// the physical experiment). Both give identical statistics.
enum class CorrectionMode { PostProcess, Channel };

/// Resource handed to the protocol: the entangled pair from the source, the
/// frequency-dephased (separable, classically correlated) version, or a
/// product state with a maximally mixed spin.
enum class ResourceKind { Entangled, SeparableClassical, ProductMixed };

enum class GhzOutcome : int { XiPlus = 0, XiMinus = 1, ChiPlus = 2, ChiMinus = 3 };

std::string to_string(GhzOutcome o);

/// Pauli correction completing the transfer for each projection outcome:
/// xi+ -> sigma_z, xi- -> identity, chi+ -> sigma_y, chi- -> sigma_x.
Matrix correction_operator(GhzOutcome o);

/// The four GHZ-type measurement kets on (Frequency, Polarization, Path):
///   xi+-  = (|H,w_red,T> +- |V,w_blue,R>)/sqrt(2)
///   chi+- = (|H,w_blue,R> +- |V,w_red,T>)/sqrt(2)
/// returned in canonical label order (Frequency, Polarization, Path).
Vector ghz_ket(GhzOutcome o);

/// Outcome/projector pairs; the four projectors plus the two complementary
/// GHZ pairs resolve the identity on the 8-dimensional photon space.
std::vector<std::pair<GhzOutcome, QuantumChannel>> ghz_projectors();

struct LossStage {
    std::string name;
    double efficiency = 1.0;
};

/// Product of stage efficiencies (all must lie in (0, 1]); the herald
/// probability per trial. Empty list gives 1.
double loss_budget(const std::vector<LossStage>& stages);

/// The six published apparatus stages under the efficiency reading;
/// product ~ 3.456e-4.
std::vector<LossStage> published_loss_budget();

/// Every parameter that degrades, delays, or discards something.
struct NoiseModel {
    SourceParams source;
    SpinParams spin;
    EtalonSpec etalon_t;
    EtalonSpec etalon_r;
    EomSettings eom;
    /// Delay between the end of the protocol sequence and the spin basis
    /// rotation; quasi-static dephasing accrues over it.
    double meas_delay_ns = 0.0;
    /// Probability a heralded click lands on a uniformly random detector
    /// (finite interferometer contrast and analysis extinction).
    double analyzer_error = 0.0;
    /// Spin storage interval while the photon flies; a refocusing pi pulse
    /// sits at the midpoint when storage_echo is true.
    double storage_span_ns = 38.0;
    bool storage_echo = true;
    std::vector<LossStage> loss_stages;
    /// Detector id (1-4) per GHZ outcome, indexed by GhzOutcome.
    std::array<int, 4> detector_map{1, 2, 3, 4};
    CorrectionMode correction_mode = CorrectionMode::PostProcess;
    ResourceKind resource = ResourceKind::Entangled;

    void validate() const;
    double overall_efficiency() const { return loss_budget(loss_stages); }

    /// All error weights zero, no storage decoherence, no loss.
    static NoiseModel ideal();
};

/// One Monte Carlo trial of coincidence data.
struct CoincidenceRecord {
    std::int64_t trial_id = 0;
    bool heralded = false;
    int detector = 0; // 1-4, valid only when heralded
    int spin_bit = 0;
    SpinBasis spin_basis = SpinBasis::Z;
};

struct VerificationResult {
    Estimate f_zz;
    Estimate v_xx;
    Estimate v_yy;
    Estimate fidelity;
    Estimate success_rate;
    /// counts[basis][spin_bit][freq_bit]; basis order ZZ, XX, YY
    std::array<std::array<std::array<std::int64_t, 2>, 2>, 3> counts{};
    std::array<std::int64_t, 3> trials_per_basis{};
    /// normalized outcome probabilities (exact values or count fractions)
    std::array<std::array<std::array<double, 2>, 2>, 3> probabilities{};
};

struct TransferResult {
    TargetState target;
    /// Per-detector fidelity (index = detector - 1).
    std::array<Estimate, 4> per_detector;
    std::array<std::int64_t, 4> heralds{};
    std::array<std::int64_t, 4> correct{};
    Estimate fidelity; // herald-weighted average over detectors
    Estimate herald_rate;
    std::array<double, 4> outcome_probability{}; // exact engine diagnostics
};

struct BaselineResult {
    /// Worst-case success guarantee of the entanglement-free strategy for
    /// arbitrary targets.
    double success_guarantee = 0.5;
    Estimate success_probability; // for the given target
    Estimate random_guess_fidelity;
};

/// Spin-photon correlation measurement in the ZZ, XX and YY bases; returns
/// the correlated-basis fidelity, the two visibilities and the composite
/// fidelity estimate. Trials are split evenly over the three bases.
VerificationResult run_entanglement_verification(const NoiseModel& noise,
                                                 std::int64_t trials, std::uint64_t seed,
                                                 Engine engine = Engine::MonteCarlo);

/// Full transfer protocol for one target: resource generation, echo storage,
/// degree-of-freedom correlation, target encoding, GHZ projection, Pauli
/// feedback and spin readout along the target axis. When `records` is given,
/// the Monte Carlo engine appends one CoincidenceRecord per trial.
TransferResult run_transfer(const TargetState& target, const NoiseModel& noise,
                            std::int64_t trials, std::uint64_t seed,
                            Engine engine = Engine::MonteCarlo,
                            std::vector<CoincidenceRecord>* records = nullptr);

/// Entanglement-free measure-and-prepare strategy plus the random-guess
/// floor; the comparison lines printed next to protocol results.
BaselineResult classical_baseline(const TargetState& target, std::int64_t trials,
                                  std::uint64_t seed);

/// Composite entanglement fidelity from a correlated-basis population
/// fidelity and the two coherence visibilities:
/// F = (f_zz + (v_xx + v_yy) / 2) / 2.
double composite_fidelity(double f_zz, double v_xx, double v_yy);

/// Expansion of the encoded composite state in the GHZ basis. For each
/// outcome: the unnormalized spin coefficient vector, its probability, the
/// residual against phase * expected_op |target_spin> / 2, and the matched
/// unit phase.
struct GhzExpansionTerm {
    GhzOutcome outcome;
    Vector coefficient; // 2-dim spin vector
    double probability;
    Complex matched_phase;
    double residual;
    double corrected_fidelity; // after applying the Pauli correction
};
std::vector<GhzExpansionTerm> ghz_expansion(const TargetState& target);

/// The composite pure state for an ideal resource and a given target
/// (labels Spin, Frequency, Polarization, Path).
LabeledState ideal_composite_state(const TargetState& target);

} // namespace photospin
