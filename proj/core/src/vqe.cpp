#include "qugstep/vqe.hpp"

#include <algorithm>
#include <cmath>

#include "qugstep/gradient.hpp"
#include "qugstep/step_size.hpp"

namespace qugstep {

VqeRecipe VqeRecipe::make(Ansatz ansatz, Hamiltonian hamiltonian) {
    MeasurementGrouping grouping = group_qubitwise(hamiltonian);
    return VqeRecipe{std::move(ansatz), std::move(hamiltonian), std::move(grouping)};
}

std::vector<double> RunTrace::noisy_energies() const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const TraceRow& r : rows) out.push_back(r.noisy_energy);
    return out;
}

std::vector<double> RunTrace::exact_energies() const {
    std::vector<double> out;
    out.reserve(rows.size());
    for (const TraceRow& r : rows) out.push_back(r.exact_energy);
    return out;
}

RunTrace run_vqe(const VqeRecipe& recipe, double step, std::uint64_t run_seed,
                 double ground_ref) {
    if (recipe.iterations < 1) throw ArgumentError("need at least one iteration");
    if (recipe.ansatz.n_qubits() != recipe.hamiltonian.n_qubits()) {
        throw ArgumentError("ansatz and Hamiltonian qubit counts differ");
    }

    const Schedule schedule{recipe.schedule_kind, recipe.gamma0, recipe.iterations};
    EnergySampler sampler(recipe.ansatz, recipe.hamiltonian, recipe.grouping,
                          recipe.budget, NoiseBackend{recipe.noise, run_seed});
    const EnergyFn oracle = [&sampler](const std::vector<double>& p) {
        return sampler.evaluate(p);
    };

    Optimizer optimizer(recipe.optimizer_kind, recipe.ansatz.initial_params().size(),
                        recipe.hyper);
    std::vector<double> params = recipe.ansatz.initial_params();

    RunTrace trace;
    trace.profile_window =
        std::min<std::size_t>(recipe.profile_window,
                              static_cast<std::size_t>(recipe.iterations));
    trace.ground_reference = ground_ref;
    long long cumulative = 0;

    for (long long t = 0; t < recipe.iterations; ++t) {
        const double rate = schedule.rate_at(t);
        GradientEstimate grad;
        try {
            grad = forward_diff(oracle, params, step, sampler.shots_per_eval());
        } catch (const NumericError& e) {
            throw RunAbortedError(std::string("iteration ") + std::to_string(t) +
                                      ": " + e.what(),
                                  std::move(trace));
        }
        cumulative += grad.shots_used;
        const double exact = exact_energy_at(recipe.ansatz, params, recipe.hamiltonian);
        trace.rows.push_back(TraceRow{t, grad.baseline_energy, exact, grad.inf_norm(),
                                      rate, cumulative});
        optimizer.update(params, grad.values, rate);
        for (double p : params) {
            if (!std::isfinite(p)) {
                throw RunAbortedError("iteration " + std::to_string(t) +
                                          ": optimizer produced non-finite parameters",
                                      std::move(trace));
            }
        }
    }

    trace.total_shots = cumulative;
    trace.noisy_profile = performance_profile(trace.noisy_energies(), trace.profile_window);
    trace.exact_profile = performance_profile(trace.exact_energies(), trace.profile_window);
    trace.final_params = std::move(params);
    return trace;
}

}  // namespace qugstep
