#include "qugstep/tuner.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qugstep/dense.hpp"
#include "qugstep/step_size.hpp"

namespace qugstep {

namespace {
constexpr std::uint64_t kTuneTag = 0x74756e65ULL;  // "tune"
}

TunerResult tune(const TunerConfig& config, const VqeRecipe& recipe) {
    if (config.candidates.empty()) {
        throw ArgumentError("tuner needs a nonempty candidate set");
    }
    for (double h : config.candidates) {
        if (!(h > 0.0)) throw ArgumentError("candidate step sizes must be positive");
    }
    if (config.test_budget < 1 || config.target_budget < 1) {
        throw ArgumentError("tuner budgets must be >= 1");
    }
    if (config.test_budget > config.target_budget) {
        throw ArgumentError("test budget exceeds target budget");
    }
    if (config.runs_per_candidate < 1) {
        throw ArgumentError("tuner needs at least one run per candidate");
    }

    VqeRecipe trial_recipe = recipe;
    trial_recipe.budget.shots = config.test_budget;
    trial_recipe.iterations =
        config.test_iterations > 0 ? config.test_iterations : recipe.iterations;
    trial_recipe.profile_window = config.profile_window;
    if (static_cast<long long>(config.profile_window) > trial_recipe.iterations) {
        throw ArgumentError("profile window exceeds the test iteration count");
    }

    const double ground_ref = ground_energy(recipe.hamiltonian);

    TunerResult result;
    result.test_budget = config.test_budget;
    result.target_budget = config.target_budget;
    result.runs_per_candidate = config.runs_per_candidate;
    result.test_iterations = trial_recipe.iterations;

    long long shots_executed = 0;
    for (std::size_t c = 0; c < config.candidates.size(); ++c) {
        const double h = config.candidates[c];
        double noisy_sum = 0.0;
        double exact_sum = 0.0;
        bool failed = false;
        for (int r = 0; r < config.runs_per_candidate; ++r) {
            const std::uint64_t trial_seed = derive_stream(
                derive_stream(config.master_seed, kTuneTag, c), static_cast<std::uint64_t>(r));
            try {
                const RunTrace trace = run_vqe(trial_recipe, h, trial_seed, ground_ref);
                noisy_sum += trace.noisy_profile;
                exact_sum += trace.exact_profile;
                shots_executed += trace.total_shots;
            } catch (const RunAbortedError& e) {
                failed = true;
                if (!e.partial.rows.empty()) {
                    shots_executed += e.partial.rows.back().cumulative_shots;
                }
                std::ostringstream msg;
                msg << "candidate h=" << h << " trial " << r << ": " << e.what();
                result.failures.push_back(msg.str());
            }
        }
        if (failed) {
            result.profiles[h] = std::numeric_limits<double>::infinity();
            result.exact_profiles[h] = std::numeric_limits<double>::infinity();
        } else {
            result.profiles[h] = noisy_sum / config.runs_per_candidate;
            result.exact_profiles[h] = exact_sum / config.runs_per_candidate;
        }
    }

    // Argmin over candidate scores; exact ties break toward the larger h,
    // which suppresses the noise term at small test budgets.
    double best_h = 0.0;
    double best_score = std::numeric_limits<double>::infinity();
    bool found = false;
    for (const auto& [h, score] : result.profiles) {
        if (!found || score < best_score || (score == best_score && h > best_h)) {
            best_h = h;
            best_score = score;
            found = true;
        }
    }
    if (!found || std::isinf(best_score)) {
        throw NumericError("every tuner candidate failed");
    }

    result.h_test = best_h;
    result.h_target = scale_step(best_h, config.test_budget, config.target_budget);

    // For total_per_evaluation budgets with no failed trials this equals
    // |S| R T (d+1) N-hat.
    result.shots_spent_tuning = shots_executed;
    result.shots_spent_tuning_per_eval =
        static_cast<long long>(config.candidates.size()) * config.runs_per_candidate *
        config.test_budget;
    return result;
}

}  // namespace qugstep
