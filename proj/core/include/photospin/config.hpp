#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "photospin/calibration.hpp"
#include "photospin/protocol.hpp"

namespace photospin {

enum class ExperimentKind { Entangle, Transfer, Echo, Fringe, LossBudget, Eq5Check };

std::string to_string(ExperimentKind k);
ExperimentKind experiment_from_string(const std::string& s);

enum class SweepSequence { Echo, Ramsey };

struct EchoSweepConfig {
    SweepSequence sequence = SweepSequence::Echo;
    double span_start_ns = 300.0;
    double span_stop_ns = 2400.0;
    int span_steps = 8;
    int phase_steps = 12;

    std::vector<double> spans() const;
};

struct FringeSweepConfig {
    int phase_steps = 24;
    /// Spin outcome the coincidence is conditioned on: bit 1 in the X basis
    /// is (|down> - |up>)/sqrt(2).
    int spin_bit = 1;
};

struct TransferRunConfig {
    /// Named targets: H, V, D+, D-, S+, S-.
    std::vector<std::string> targets{"H", "D+", "S+"};
};

/// Everything a run needs; unspecified keys keep calibrated defaults.
struct RunConfig {
    ExperimentKind experiment = ExperimentKind::Transfer;
    std::uint64_t seed = 20260808;
    /// Total protocol repetitions for entangle/transfer/lossbudget/eq5check
    /// (eq5check: number of random targets); per-sweep-point samples for
    /// echo/fringe.
    std::int64_t trials = 10000;
    Engine engine = Engine::MonteCarlo;
    std::string out_path; // empty -> "<experiment>.csv"
    NoiseModel noise = calibrated_noise_model();
    EchoSweepConfig echo;
    FringeSweepConfig fringe;
    TransferRunConfig transfer;

    void validate() const;
    std::string effective_out_path() const;
};

TargetState target_from_name(const std::string& name);

/// Parses the flat-plus-sections key-value format over `base`. Lines may be
/// prefixed with "# " (the CSV header echo parses as a config); "##" lines
/// are pure comments. Unknown keys raise ConfigParseError.
RunConfig parse_config(const std::string& text, RunConfig base = RunConfig{});

/// Reads and parses a config (or a previously written CSV) file.
RunConfig load_config_file(const std::string& path, RunConfig base = RunConfig{});

/// Effective configuration as parseable key = value text, full precision.
std::string serialize_config(const RunConfig& cfg);

} // namespace photospin
