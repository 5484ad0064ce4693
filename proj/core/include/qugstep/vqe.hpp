#pragma once

#include <cstdint>
#include <vector>

#include "qugstep/ansatz.hpp"
#include "qugstep/errors.hpp"
#include "qugstep/measurement.hpp"
#include "qugstep/optimizer.hpp"
#include "qugstep/pauli.hpp"

namespace qugstep {

// Everything needed to execute one seeded VQE run, except the
// finite-difference step size and the seed.
struct VqeRecipe {
    Ansatz ansatz;
    Hamiltonian hamiltonian;
    MeasurementGrouping grouping;
    OptimizerKind optimizer_kind = OptimizerKind::adam;
    OptimizerHyperparams hyper = {};
    ScheduleKind schedule_kind = ScheduleKind::cosine;
    double gamma0 = 0.1;
    long long iterations = 200;
    ShotBudget budget = {};
    NoiseKind noise = NoiseKind::sampled;
    std::size_t profile_window = 20;

    static VqeRecipe make(Ansatz ansatz, Hamiltonian hamiltonian);
};

struct TraceRow {
    long long iteration;
    double noisy_energy;  // shared finite-difference baseline at theta_t
    double exact_energy;  // simulator energy at theta_t
    double grad_inf_norm;
    double learning_rate;
    long long cumulative_shots;
};

struct RunTrace {
    std::vector<TraceRow> rows;
    std::size_t profile_window = 20;
    double noisy_profile = 0.0;  // mean noisy energy over the final window
    double exact_profile = 0.0;  // mean exact energy over the final window
    double ground_reference = 0.0;
    long long total_shots = 0;
    std::vector<double> final_params;

    std::vector<double> noisy_energies() const;
    std::vector<double> exact_energies() const;
};

// Thrown when the optimization produces non-finite parameters or energies;
// carries the rows recorded so far so callers can flush a diagnostic trace.
struct RunAbortedError : NumericError {
    RunAbortedError(const std::string& message, RunTrace partial_trace)
        : NumericError(message), partial(std::move(partial_trace)) {}
    RunTrace partial;
};

// One full optimization: for t = 0..T-1, compute the scheduled rate, a
// forward-difference gradient at the configured shot budget, and an
// optimizer update; record one trace row per iteration (before the update).
// `ground_ref` is stored in the trace for reporting; pass ground_energy of
// the recipe's Hamiltonian.
RunTrace run_vqe(const VqeRecipe& recipe, double step, std::uint64_t run_seed,
                 double ground_ref);

}  // namespace qugstep
