#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qugstep/ansatz.hpp"
#include "qugstep/pauli.hpp"
#include "qugstep/rng.hpp"

namespace qugstep {

// How `shots` is spent on one objective-function evaluation: either as a
// total split evenly across measurement groups, or per group.
enum class ShotInterpretation { total_per_evaluation, per_group };

struct ShotBudget {
    long long shots = 1;
    ShotInterpretation interpretation = ShotInterpretation::total_per_evaluation;
};

// sampled: rotate into each group's basis and draw bitstrings from the
//   measured distribution (physically faithful).
// gaussian_surrogate: exact energy plus sigma(theta)/sqrt(N) times a
//   standard normal draw — exactly the additive-noise estimator model the
//   step-size theory assumes.
// exact: the simulator energy with no noise (an infinite-budget stand-in).
enum class NoiseKind { sampled, gaussian_surrogate, exact };

struct NoiseBackend {
    NoiseKind kind = NoiseKind::sampled;
    std::uint64_t seed = 0;
};

// Even split with the remainder going one each to the first groups.
// Throws BudgetError when total < n_groups.
std::vector<long long> split_shots(long long total, std::size_t n_groups);

// Shots actually consumed by one evaluation under the given budget.
long long shots_per_evaluation(const ShotBudget& budget, std::size_t n_groups);

// One shot-noisy estimate of <psi(params)|H|psi(params)>. Unbiased under
// both backends; bit-identical for identical (inputs, rng state).
double sample_energy(const Ansatz& ansatz, const std::vector<double>& params,
                     const Hamiltonian& h, const MeasurementGrouping& grouping,
                     const ShotBudget& budget, NoiseKind kind, Rng& rng);

// sigma(theta) such that Var[estimate] = sigma^2 / shots for the configured
// grouping and shot split: per group g with O_g = sum_i c_i P_i, the
// single-shot variance is <O_g^2> - <O_g>^2 on the prepared state, and
// Var[estimate] = sum_g v_g / N_g.
double exact_sigma(const Ansatz& ansatz, const std::vector<double>& params,
                   const Hamiltonian& h, const MeasurementGrouping& grouping,
                   const ShotBudget& budget);

// Stateful noisy oracle: evaluation k uses the substream derived from
// (seed, k), so a gradient's d+1 calls are order-independent and a whole
// trace reproduces from the seed alone.
class EnergySampler {
  public:
    EnergySampler(const Ansatz& ansatz, const Hamiltonian& h,
                  const MeasurementGrouping& grouping, ShotBudget budget,
                  NoiseBackend backend);

    double evaluate(const std::vector<double>& params);

    long long shots_per_eval() const { return shots_per_eval_; }
    long long evaluations() const { return evaluations_; }
    const ShotBudget& budget() const { return budget_; }

  private:
    const Ansatz* ansatz_;
    const Hamiltonian* hamiltonian_;
    const MeasurementGrouping* grouping_;
    ShotBudget budget_;
    NoiseBackend backend_;
    long long shots_per_eval_;
    long long evaluations_ = 0;
};

}  // namespace qugstep
