#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qugstep/vqe.hpp"

namespace qugstep {

// Grid-search tuner inputs: candidate step sizes, the test and target shot
// budgets, and the run recipe the trials execute.
struct TunerConfig {
    std::vector<double> candidates;
    long long target_budget = 0;        // N
    long long test_budget = 0;          // N-hat, <= N
    int runs_per_candidate = 5;         // R
    std::size_t profile_window = 20;    // W
    long long test_iterations = 0;      // defaults to the recipe's T when 0
    std::uint64_t master_seed = 0;
};

struct TunerResult {
    double h_test = 0.0;    // chosen step at the test budget
    double h_target = 0.0;  // h_test scaled to the target budget
    long long test_budget = 0;
    long long target_budget = 0;
    int runs_per_candidate = 0;
    long long test_iterations = 0;
    // Mean performance profile (noisy energies) per candidate, +inf for
    // candidates whose trials failed.
    std::map<double, double> profiles;
    // Matching mean exact-energy profiles, logged for analysis only.
    std::map<double, double> exact_profiles;
    std::vector<std::string> failures;
    // Measurement shots consumed by the tuning phase, counted two ways:
    // the full gradient cost |S| R T (d+1) N-hat, and the per-evaluation
    // convention |S| R N-hat.
    long long shots_spent_tuning = 0;
    long long shots_spent_tuning_per_eval = 0;
};

// Algorithm: for each candidate h, run R independent seeded VQE trials at
// the test budget; score = mean performance profile of the noisy traces;
// pick the argmin (ties toward the larger h) and scale it to the target
// budget. Reproducible: identical master seed, identical result.
TunerResult tune(const TunerConfig& config, const VqeRecipe& recipe);

}  // namespace qugstep
