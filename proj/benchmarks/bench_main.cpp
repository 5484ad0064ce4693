#include <benchmark/benchmark.h>

#include "qugstep/dense.hpp"
#include "qugstep/gradient.hpp"
#include "qugstep/measurement.hpp"
#include "qugstep/models.hpp"
#include "qugstep/vqe.hpp"

using namespace qugstep;

namespace {

Hamiltonian chain_hamiltonian(int n_qubits) {
    std::vector<PauliTerm> terms;
    for (int q = 0; q + 1 < n_qubits; ++q) {
        std::vector<Pauli> zz(static_cast<std::size_t>(n_qubits), Pauli::I);
        zz[static_cast<std::size_t>(q)] = Pauli::Z;
        zz[static_cast<std::size_t>(q + 1)] = Pauli::Z;
        terms.push_back({-0.6, PauliString(zz)});
    }
    for (int q = 0; q < n_qubits; ++q) {
        std::vector<Pauli> x(static_cast<std::size_t>(n_qubits), Pauli::I);
        x[static_cast<std::size_t>(q)] = Pauli::X;
        terms.push_back({-0.3, PauliString(x)});
    }
    return Hamiltonian(n_qubits, std::move(terms));
}

void BM_PauliRotation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    StateVector psi(n, 0);
    std::vector<Pauli> letters(static_cast<std::size_t>(n), Pauli::X);
    const PauliString p(letters);
    for (auto _ : state) {
        psi.apply_pauli_rotation(p, 0.01);
        benchmark::DoNotOptimize(psi.amplitude(0));
    }
}
BENCHMARK(BM_PauliRotation)->DenseRange(4, 12, 2);

void BM_ExactEnergy(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Hamiltonian h = chain_hamiltonian(n);
    const Ansatz ansatz = builtin_hw_efficient(n, 2, false, 0.3);
    const StateVector psi = ansatz.prepare(ansatz.initial_params());
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_energy(psi, h));
    }
}
BENCHMARK(BM_ExactEnergy)->DenseRange(4, 10, 2);

void BM_SampleEnergy(benchmark::State& state) {
    const Hamiltonian h = chain_hamiltonian(4);
    const Ansatz ansatz = builtin_hw_efficient(4, 2, false, 0.3);
    const MeasurementGrouping grouping = group_qubitwise(h);
    const ShotBudget budget{state.range(0)};
    Rng rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_energy(ansatz, ansatz.initial_params(), h,
                                               grouping, budget, NoiseKind::sampled, rng));
    }
}
BENCHMARK(BM_SampleEnergy)->RangeMultiplier(4)->Range(16, 16384);

void BM_ForwardDiffGradient(benchmark::State& state) {
    const Hamiltonian h = chain_hamiltonian(4);
    const Ansatz ansatz = builtin_hw_efficient(4, 2, false, 0.3);
    const MeasurementGrouping grouping = group_qubitwise(h);
    EnergySampler sampler(ansatz, h, grouping, ShotBudget{360},
                          NoiseBackend{NoiseKind::sampled, 7});
    const EnergyFn oracle = [&](const std::vector<double>& p) {
        return sampler.evaluate(p);
    };
    const std::vector<double> params = ansatz.initial_params();
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward_diff(oracle, params, 0.2, 360));
    }
}
BENCHMARK(BM_ForwardDiffGradient);

void BM_GroundEnergy(benchmark::State& state) {
    const Hamiltonian h = chain_hamiltonian(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ground_energy(h));
    }
}
BENCHMARK(BM_GroundEnergy)->DenseRange(4, 8, 2);

void BM_VqeIteration(benchmark::State& state) {
    Hamiltonian h = chain_hamiltonian(4);
    Ansatz ansatz = builtin_hw_efficient(4, 2, false, 0.3);
    VqeRecipe recipe = VqeRecipe::make(std::move(ansatz), std::move(h));
    recipe.budget.shots = 360;
    long long iterations = 0;
    for (auto _ : state) {
        state.PauseTiming();
        recipe.iterations = 8;
        state.ResumeTiming();
        benchmark::DoNotOptimize(run_vqe(recipe, 0.2, 11, 0.0));
        iterations += recipe.iterations;
    }
    state.SetItemsProcessed(iterations);
}
BENCHMARK(BM_VqeIteration);

}  // namespace

BENCHMARK_MAIN();
