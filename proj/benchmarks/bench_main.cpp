#include <benchmark/benchmark.h>

#include "photospin/calibration.hpp"
#include "photospin/optics.hpp"
#include "photospin/protocol.hpp"
#include "photospin/source.hpp"
#include "photospin/spin_dynamics.hpp"

using namespace photospin;

namespace {

void BM_tensor_to_full_register(benchmark::State& state) {
    const auto pair = ideal_entangled_pair();
    Vector h(2), t(2);
    h << 1, 0;
    t << 1, 0;
    const auto pol = LabeledState::pure({Dof::Polarization}, h);
    const auto path = LabeledState::pure({Dof::Path}, t);
    for (auto _ : state) {
        auto full = tensor(tensor(pair, pol), path);
        benchmark::DoNotOptimize(full.matrix().data());
    }
}
BENCHMARK(BM_tensor_to_full_register);

void BM_apply_embedded_unitary(benchmark::State& state) {
    const auto phi = ideal_composite_state(TargetState::d_plus());
    const auto ch = QuantumChannel::unitary({Dof::Spin}, pauli_y());
    for (auto _ : state) {
        auto out = apply(phi, ch);
        benchmark::DoNotOptimize(out.matrix().data());
    }
}
BENCHMARK(BM_apply_embedded_unitary);

void BM_partial_trace_photon(benchmark::State& state) {
    const auto phi = ideal_composite_state(TargetState::sigma_plus());
    for (auto _ : state) {
        auto spin = partial_trace(phi, {Dof::Frequency, Dof::Polarization, Dof::Path});
        benchmark::DoNotOptimize(spin.matrix().data());
    }
}
BENCHMARK(BM_partial_trace_photon);

void BM_ghz_expansion(benchmark::State& state) {
    for (auto _ : state) {
        auto terms = ghz_expansion(TargetState::d_plus());
        benchmark::DoNotOptimize(terms.data());
    }
}
BENCHMARK(BM_ghz_expansion);

void BM_storage_evolution(benchmark::State& state) {
    const auto noise = calibrated_noise_model();
    const auto pair = generate_entangled_pair(noise.source);
    const auto seq = PulseSequence::storage_echo(noise.storage_span_ns);
    for (auto _ : state) {
        auto out = evolve(pair, seq, noise.spin, 0.1);
        benchmark::DoNotOptimize(out.matrix().data());
    }
}
BENCHMARK(BM_storage_evolution);

void BM_transfer_trials(benchmark::State& state) {
    const auto noise = calibrated_noise_model();
    const auto trials = state.range(0);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto res = run_transfer(TargetState::d_plus(), noise, trials, seed++,
                                Engine::MonteCarlo);
        benchmark::DoNotOptimize(res.fidelity.value);
    }
    state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_transfer_trials)->Arg(100)->Arg(1000);

void BM_verification_trials(benchmark::State& state) {
    const auto noise = calibrated_noise_model();
    const auto trials = state.range(0);
    std::uint64_t seed = 1;
    for (auto _ : state) {
        auto res = run_entanglement_verification(noise, trials, seed++,
                                                 Engine::MonteCarlo);
        benchmark::DoNotOptimize(res.fidelity.value);
    }
    state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_verification_trials)->Arg(100)->Arg(1000);

void BM_exact_transfer(benchmark::State& state) {
    const auto noise = calibrated_noise_model();
    for (auto _ : state) {
        auto res = run_transfer(TargetState::sigma_plus(), noise, 1, 1, Engine::Exact);
        benchmark::DoNotOptimize(res.fidelity.value);
    }
}
BENCHMARK(BM_exact_transfer);

} // namespace

BENCHMARK_MAIN();
