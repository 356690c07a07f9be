#pragma once

#include <cstdint>
#include <vector>

namespace photospin {

/// Deterministic random source (xoshiro256++ seeded via splitmix64).
///
/// Distributions are implemented by hand so identical (seed, stream) pairs
/// give identical draws on every platform; std:: distributions are
/// implementation-defined and would break byte-identical CSV output.
class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform();

    /// Standard normal via Box-Muller (one spare cached).
    double gaussian();

    bool bernoulli(double p);

    /// Index into `weights` (need not be normalized; total passed by caller).
    int categorical(const std::vector<double>& weights, double total);

    /// Uniform integer in [0, n).
    int uniform_int(int n);

  private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// splitmix64 step; used for deriving independent stream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace photospin
