#pragma once

#include "photospin/config.hpp"
#include "photospin/csv.hpp"

namespace photospin {

/// CSV document plus the human summary the CLI prints.
struct ExperimentOutput {
    CsvDocument csv;
    std::vector<std::string> summary;
};

/// Per-span fringe visibility sweep (echo or Ramsey) and the extracted
/// coherence time.
struct EchoSweepResult {
    std::vector<double> spans_ns;
    std::vector<Estimate> visibilities;
    double fitted_time_ns = 0.0; // T2 (echo) or T2* (ramsey)
};

EchoSweepResult run_echo_sweep(const RunConfig& cfg);

/// RF-phase fringe of spin-conditioned coincidences.
struct FringeResult {
    std::vector<double> phases_rad;
    std::vector<Estimate> coincidence;
    Estimate fitted_visibility;  // normalized fringe contrast
    double analytic_visibility = 0.0;
};

FringeResult run_fringe(const RunConfig& cfg);

/// Runs the configured experiment and renders CSV + summary.
ExperimentOutput run_experiment(const RunConfig& cfg);

} // namespace photospin
