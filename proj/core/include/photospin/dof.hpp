#pragma once

#include <string>
#include <vector>

namespace photospin {

/// Two-level degrees of freedom tracked by the simulator.
///
/// Basis conventions (index 0 / index 1):
///   Spin          |down>  / |up>
///   Frequency     |w_red> / |w_blue>
///   Polarization  |H>     / |V>
///   Path          |T>     / |R>      (transmitted / reflected)
///
/// The enum value fixes the canonical label order used for storage:
/// (Spin, Frequency, Polarization, Path), first label = most significant bit.
enum class Dof : int {
    Spin = 0,
    Frequency = 1,
    Polarization = 2,
    Path = 3,
};

inline constexpr int kNumDofKinds = 4;

std::string to_string(Dof d);

/// Sorts labels into canonical order, throws DuplicateLabelError on repeats.
std::vector<Dof> canonical_labels(std::vector<Dof> labels);

/// True if `labels` is sorted canonically with no duplicates.
bool is_canonical(const std::vector<Dof>& labels);

} // namespace photospin
