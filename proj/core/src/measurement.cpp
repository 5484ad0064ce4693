#include "qugstep/measurement.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "qugstep/errors.hpp"

namespace qugstep {

std::vector<long long> split_shots(long long total, std::size_t n_groups) {
    if (n_groups < 1) throw ArgumentError("need at least one group");
    if (total < static_cast<long long>(n_groups)) {
        throw BudgetError("cannot split " + std::to_string(total) + " shots across " +
                          std::to_string(n_groups) + " measurement groups");
    }
    const long long base = total / static_cast<long long>(n_groups);
    const long long rem = total % static_cast<long long>(n_groups);
    std::vector<long long> split(n_groups, base);
    for (long long g = 0; g < rem; ++g) split[static_cast<std::size_t>(g)] += 1;
    return split;
}

long long shots_per_evaluation(const ShotBudget& budget, std::size_t n_groups) {
    if (budget.shots < 1) throw BudgetError("shot budget must be >= 1");
    if (budget.interpretation == ShotInterpretation::per_group) {
        return budget.shots * static_cast<long long>(n_groups);
    }
    return budget.shots;
}

namespace {

std::vector<long long> group_shot_counts(const ShotBudget& budget,
                                         std::size_t n_groups) {
    if (budget.interpretation == ShotInterpretation::per_group) {
        if (budget.shots < 1) throw BudgetError("shot budget must be >= 1");
        return std::vector<long long>(n_groups, budget.shots);
    }
    return split_shots(budget.shots, n_groups);
}

// Rotates the group's measurement basis onto Z: Hadamard for X, S-dagger
// then Hadamard for Y.
void rotate_to_group_basis(StateVector& state, const PauliString& basis) {
    for (int q = 0; q < basis.n_qubits(); ++q) {
        switch (basis.letter(q)) {
            case Pauli::X:
                state.apply_hadamard(q);
                break;
            case Pauli::Y:
                state.apply_s_dagger(q);
                state.apply_hadamard(q);
                break;
            default:
                break;
        }
    }
}

double sample_group(const StateVector& rotated, const Hamiltonian& h,
                    const std::vector<std::size_t>& term_indices, long long shots,
                    Rng& rng) {
    // Cumulative measurement distribution over basis states.
    const auto& amps = rotated.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b) {
        acc += std::norm(amps[b]);
        cdf[b] = acc;
    }

    double total = 0.0;
    for (long long s = 0; s < shots; ++s) {
        const double u = rng.uniform() * acc;
        const std::size_t outcome = static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        double value = 0.0;
        for (std::size_t idx : term_indices) {
            const PauliTerm& t = h.terms()[idx];
            const int parity = std::popcount(outcome & t.string.support_mask()) & 1;
            value += parity ? -t.coefficient : t.coefficient;
        }
        total += value;
    }
    return total / static_cast<double>(shots);
}

}  // namespace

double sample_energy(const Ansatz& ansatz, const std::vector<double>& params,
                     const Hamiltonian& h, const MeasurementGrouping& grouping,
                     const ShotBudget& budget, NoiseKind kind, Rng& rng) {
    if (kind == NoiseKind::exact) {
        return exact_energy_at(ansatz, params, h);
    }
    if (kind == NoiseKind::gaussian_surrogate) {
        const double e = exact_energy_at(ansatz, params, h);
        const double sigma = exact_sigma(ansatz, params, h, grouping, budget);
        const double n = static_cast<double>(
            shots_per_evaluation(budget, grouping.n_groups()));
        return e + rng.normal() * sigma / std::sqrt(n);
    }

    const std::vector<long long> counts = group_shot_counts(budget, grouping.n_groups());
    const StateVector prepared = ansatz.prepare(params);
    double estimate = 0.0;
    for (std::size_t g = 0; g < grouping.n_groups(); ++g) {
        if (counts[g] < 1) {
            throw BudgetError("zero shots assigned to a nonempty measurement group");
        }
        StateVector rotated = prepared;
        rotate_to_group_basis(rotated, grouping.bases[g]);
        estimate += sample_group(rotated, h, grouping.groups[g], counts[g], rng);
    }
    return estimate;
}

double exact_sigma(const Ansatz& ansatz, const std::vector<double>& params,
                   const Hamiltonian& h, const MeasurementGrouping& grouping,
                   const ShotBudget& budget) {
    const std::vector<long long> counts = group_shot_counts(budget, grouping.n_groups());
    const StateVector state = ansatz.prepare(params);

    double variance = 0.0;  // Var[estimate] for the configured split
    for (std::size_t g = 0; g < grouping.n_groups(); ++g) {
        // phi = O_g |psi> accumulated term by term; then
        // <O_g> = Re<psi|phi>, <O_g^2> = <phi|phi>.
        std::vector<std::complex<double>> phi(state.dim(), {0.0, 0.0});
        for (std::size_t idx : grouping.groups[g]) {
            StateVector term_state = state;
            term_state.apply_pauli(h.terms()[idx].string);
            const double c = h.terms()[idx].coefficient;
            for (std::size_t b = 0; b < phi.size(); ++b) {
                phi[b] += c * term_state.amplitude(b);
            }
        }
        double mean = 0.0, second = 0.0;
        for (std::size_t b = 0; b < phi.size(); ++b) {
            mean += (std::conj(state.amplitude(b)) * phi[b]).real();
            second += std::norm(phi[b]);
        }
        const double v_g = std::max(0.0, second - mean * mean);
        variance += v_g / static_cast<double>(counts[g]);
    }

    const double n = static_cast<double>(
        shots_per_evaluation(budget, grouping.n_groups()));
    return std::sqrt(n * variance);
}

EnergySampler::EnergySampler(const Ansatz& ansatz, const Hamiltonian& h,
                             const MeasurementGrouping& grouping, ShotBudget budget,
                             NoiseBackend backend)
    : ansatz_(&ansatz),
      hamiltonian_(&h),
      grouping_(&grouping),
      budget_(budget),
      backend_(backend),
      shots_per_eval_(shots_per_evaluation(budget, grouping.n_groups())) {}

double EnergySampler::evaluate(const std::vector<double>& params) {
    Rng rng(backend_.seed,
            derive_stream(backend_.seed, static_cast<std::uint64_t>(evaluations_)));
    ++evaluations_;
    return sample_energy(*ansatz_, params, *hamiltonian_, *grouping_, budget_,
                         backend_.kind, rng);
}

}  // namespace qugstep
