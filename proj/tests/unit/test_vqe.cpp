#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "qugstep/dense.hpp"
#include "qugstep/errors.hpp"
#include "qugstep/models.hpp"
#include "qugstep/tuner.hpp"
#include "qugstep/vqe.hpp"

using namespace qugstep;

namespace {

Hamiltonian six_term_two_qubit() {
    return Hamiltonian(2, {{-0.48, PauliString::parse("II", 2)},
                           {0.17, PauliString::parse("ZI", 2)},
                           {-0.43, PauliString::parse("IZ", 2)},
                           {0.57, PauliString::parse("ZZ", 2)},
                           {0.091, PauliString::parse("YY", 2)},
                           {0.091, PauliString::parse("XX", 2)}});
}

VqeRecipe small_recipe(long long iterations = 30, long long shots = 60) {
    Hamiltonian h = six_term_two_qubit();
    std::vector<Gate> gates;
    gates.push_back(PauliRotationGate{PauliString::parse("XY", 2), 0});
    Ansatz ansatz(2, "01", std::move(gates), 1, {0.0});
    VqeRecipe recipe = VqeRecipe::make(std::move(ansatz), std::move(h));
    recipe.iterations = iterations;
    recipe.budget.shots = shots;
    return recipe;
}

// Dense-matrix circuit simulation, independent of the StateVector kernels.
Eigen::VectorXcd dense_prepare(const Ansatz& ansatz, const std::vector<double>& params) {
    const Eigen::Index dim = Eigen::Index{1} << ansatz.n_qubits();
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dim);
    std::size_t index = 0;
    for (char c : ansatz.reference()) index = (index << 1) | static_cast<std::size_t>(c - '0');
    psi[static_cast<Eigen::Index>(index)] = 1.0;

    const std::complex<double> mi{0.0, -1.0};
    for (const Gate& gate : ansatz.gates()) {
        if (const auto* pr = std::get_if<PauliRotationGate>(&gate)) {
            const double t = params[static_cast<std::size_t>(pr->param_index)];
            const Eigen::MatrixXcd p = dense_matrix(pr->string);
            psi = (std::cos(t) * Eigen::MatrixXcd::Identity(dim, dim) +
                   mi * std::sin(t) * p) *
                  psi;
        } else if (const auto* ry = std::get_if<RotYGate>(&gate)) {
            std::vector<Pauli> letters(static_cast<std::size_t>(ansatz.n_qubits()), Pauli::I);
            letters[static_cast<std::size_t>(ry->qubit)] = Pauli::Y;
            const double t = 0.5 * params[static_cast<std::size_t>(ry->param_index)];
            psi = (std::cos(t) * Eigen::MatrixXcd::Identity(dim, dim) +
                   mi * std::sin(t) * dense_matrix(PauliString(letters))) *
                  psi;
        } else if (const auto* rz = std::get_if<RotZGate>(&gate)) {
            std::vector<Pauli> letters(static_cast<std::size_t>(ansatz.n_qubits()), Pauli::I);
            letters[static_cast<std::size_t>(rz->qubit)] = Pauli::Z;
            const double t = 0.5 * params[static_cast<std::size_t>(rz->param_index)];
            psi = (std::cos(t) * Eigen::MatrixXcd::Identity(dim, dim) +
                   mi * std::sin(t) * dense_matrix(PauliString(letters))) *
                  psi;
        } else if (const auto* cx = std::get_if<CnotGate>(&gate)) {
            const int n = ansatz.n_qubits();
            const std::uint64_t cbit = 1ULL << (n - 1 - cx->control);
            const std::uint64_t tbit = 1ULL << (n - 1 - cx->target);
            Eigen::VectorXcd out = Eigen::VectorXcd::Zero(dim);
            for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
                const std::uint64_t dest = (b & cbit) ? (b ^ tbit) : b;
                out[static_cast<Eigen::Index>(dest)] = psi[static_cast<Eigen::Index>(b)];
            }
            psi = out;
        }
    }
    return psi;
}

}  // namespace

TEST_CASE("mismatched qubit counts are rejected") {
    Hamiltonian h(3, {{1.0, PauliString::parse("ZZZ", 3)}});
    std::vector<Gate> gates;
    gates.push_back(PauliRotationGate{PauliString::parse("XY", 2), 0});
    Ansatz ansatz(2, "01", std::move(gates), 1, {0.0});
    VqeRecipe recipe{std::move(ansatz), std::move(h), MeasurementGrouping{}};
    recipe.iterations = 5;
    CHECK_THROWS_AS(run_vqe(recipe, 0.1, 1, 0.0), ArgumentError);
}

TEST_CASE("a one-iteration run produces exactly one record") {
    VqeRecipe recipe = small_recipe(1);
    const RunTrace trace = run_vqe(recipe, 0.4, 99, ground_energy(recipe.hamiltonian));
    CHECK(trace.rows.size() == 1);
    CHECK(trace.profile_window == 1);
}

TEST_CASE("trace bookkeeping: counters, rates, shot accounting") {
    VqeRecipe recipe = small_recipe(25, 60);
    const RunTrace trace = run_vqe(recipe, 0.4, 7, ground_energy(recipe.hamiltonian));
    REQUIRE(trace.rows.size() == 25);
    const long long d = recipe.ansatz.n_params();
    const Schedule schedule{recipe.schedule_kind, recipe.gamma0, recipe.iterations};
    long long cumulative = 0;
    for (std::size_t t = 0; t < trace.rows.size(); ++t) {
        CHECK(trace.rows[t].iteration == static_cast<long long>(t));
        CHECK(trace.rows[t].learning_rate ==
              doctest::Approx(schedule.rate_at(static_cast<long long>(t))));
        cumulative += (d + 1) * recipe.budget.shots;
        CHECK(trace.rows[t].cumulative_shots == cumulative);
    }
    CHECK(trace.total_shots == 25 * (d + 1) * recipe.budget.shots);
}

TEST_CASE("exact energies respect the variational bound") {
    Rng rng(77);
    for (int trial = 0; trial < 3; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_u32() % 2);
        Hamiltonian h = test_helpers::random_hamiltonian(rng, n, 8);
        Ansatz ansatz = test_helpers::random_ansatz(rng, n, 4);
        VqeRecipe recipe = VqeRecipe::make(std::move(ansatz), std::move(h));
        recipe.iterations = 40;
        recipe.budget.shots = 30;
        const double ground = ground_energy(recipe.hamiltonian);
        const RunTrace trace = run_vqe(recipe, 0.3, 17 + trial, ground);
        for (const TraceRow& row : trace.rows) {
            CHECK(row.exact_energy >= ground - 1e-9);
        }
    }
}

TEST_CASE("identical seeds reproduce the trace bit for bit") {
    VqeRecipe recipe = small_recipe(20, 45);
    const RunTrace a = run_vqe(recipe, 0.4, 1234, 0.0);
    const RunTrace b = run_vqe(recipe, 0.4, 1234, 0.0);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t t = 0; t < a.rows.size(); ++t) {
        CHECK(a.rows[t].noisy_energy == b.rows[t].noisy_energy);
        CHECK(a.rows[t].exact_energy == b.rows[t].exact_energy);
        CHECK(a.rows[t].grad_inf_norm == b.rows[t].grad_inf_norm);
    }
    const RunTrace c = run_vqe(recipe, 0.4, 1235, 0.0);
    CHECK(a.rows[5].noisy_energy != c.rows[5].noisy_energy);
}

TEST_CASE("noiseless run matches a dense-matrix descent oracle") {
    VqeRecipe recipe = small_recipe(40, 10);
    recipe.noise = NoiseKind::exact;
    recipe.optimizer_kind = OptimizerKind::gd;
    const double step = 0.05;
    const RunTrace trace = run_vqe(recipe, step, 0, 0.0);

    // Independent loop: dense circuit simulation, forward differences on
    // dense energies, plain gradient descent, the same cosine schedule.
    const Eigen::MatrixXcd hm = dense_matrix(recipe.hamiltonian);
    const auto dense_energy = [&](const std::vector<double>& p) {
        const Eigen::VectorXcd psi = dense_prepare(recipe.ansatz, p);
        return psi.dot(hm * psi).real();
    };
    std::vector<double> params = recipe.ansatz.initial_params();
    for (std::size_t t = 0; t < trace.rows.size(); ++t) {
        const double tt = static_cast<double>(t);
        const double rate =
            recipe.gamma0 * 0.5 *
            (std::cos(3.14159265358979323846 * tt / static_cast<double>(recipe.iterations)) +
             1.0);
        const double base = dense_energy(params);
        CHECK(std::abs(trace.rows[t].noisy_energy - base) < 1e-8);
        CHECK(std::abs(trace.rows[t].exact_energy - base) < 1e-8);
        CHECK(std::abs(trace.rows[t].learning_rate - rate) < 1e-12);
        std::vector<double> grad(params.size());
        for (std::size_t i = 0; i < params.size(); ++i) {
            std::vector<double> shifted = params;
            shifted[i] += step;
            grad[i] = (dense_energy(shifted) - base) / step;
        }
        for (std::size_t i = 0; i < params.size(); ++i) {
            params[i] -= rate * grad[i];
        }
    }
}

TEST_CASE("diverging parameters abort with a diagnostic trace") {
    VqeRecipe recipe = small_recipe(50, 9);
    recipe.optimizer_kind = OptimizerKind::gd;
    recipe.gamma0 = 1e305;  // overflows the first noisy update
    bool aborted = false;
    try {
        run_vqe(recipe, 1e-9, 3, 0.0);
    } catch (const RunAbortedError& e) {
        aborted = true;
        CHECK(!e.partial.rows.empty());
    }
    CHECK(aborted);
}

TEST_CASE("tuner degenerate cases") {
    VqeRecipe recipe = small_recipe(30, 60);

    SUBCASE("a single candidate is always chosen") {
        TunerConfig config;
        config.candidates = {0.35};
        config.test_budget = 9;
        config.target_budget = 60;
        config.runs_per_candidate = 2;
        config.profile_window = 10;
        config.master_seed = 5;
        const TunerResult result = tune(config, recipe);
        CHECK(result.h_test == doctest::Approx(0.35));
    }

    SUBCASE("equal budgets leave the step unscaled") {
        TunerConfig config;
        config.candidates = {0.2, 0.5};
        config.test_budget = 60;
        config.target_budget = 60;
        config.runs_per_candidate = 2;
        config.profile_window = 10;
        config.master_seed = 6;
        const TunerResult result = tune(config, recipe);
        CHECK(result.h_target == doctest::Approx(result.h_test));
    }

    SUBCASE("test budgets above the target are rejected") {
        TunerConfig config;
        config.candidates = {0.2};
        config.test_budget = 120;
        config.target_budget = 60;
        CHECK_THROWS_AS(tune(config, recipe), ArgumentError);
    }
}

TEST_CASE("tuner is reproducible and accounts for its shots") {
    VqeRecipe recipe = small_recipe(30, 360);
    TunerConfig config;
    config.candidates = {0.01, 0.1, 1.0};
    config.test_budget = 9;
    config.target_budget = 360;
    config.runs_per_candidate = 3;
    config.profile_window = 10;
    config.test_iterations = 20;
    config.master_seed = 42;

    const TunerResult a = tune(config, recipe);
    const TunerResult b = tune(config, recipe);
    CHECK(a.h_test == b.h_test);
    CHECK(a.h_target == b.h_target);
    for (const auto& [h, score] : a.profiles) {
        CHECK(b.profiles.at(h) == score);
    }

    const long long d = recipe.ansatz.n_params();
    const long long expected = 3 * 3 * 20 * (d + 1) * 9;
    CHECK(a.shots_spent_tuning == expected);
    CHECK(a.shots_spent_tuning_per_eval == 3 * 3 * 9);
    CHECK(a.h_target == doctest::Approx(a.h_test * std::pow(9.0 / 360.0, 0.25)));
}

TEST_CASE("exact ties break toward the larger candidate") {
    // A pure identity observable makes every trace exactly constant, so all
    // candidate profiles are equal.
    Hamiltonian h(2, {{0.7, PauliString::parse("II", 2)}});
    std::vector<Gate> gates;
    gates.push_back(PauliRotationGate{PauliString::parse("XY", 2), 0});
    Ansatz ansatz(2, "01", std::move(gates), 1, {0.0});
    VqeRecipe recipe = VqeRecipe::make(std::move(ansatz), std::move(h));
    recipe.iterations = 25;
    recipe.budget.shots = 9;

    TunerConfig config;
    config.candidates = {0.5, 0.1, 1.0};
    config.test_budget = 9;
    config.target_budget = 9;
    config.runs_per_candidate = 2;
    config.profile_window = 10;
    config.master_seed = 3;
    const TunerResult result = tune(config, recipe);
    CHECK(result.profiles.at(0.1) == result.profiles.at(1.0));
    CHECK(result.h_test == doctest::Approx(1.0));
}

TEST_CASE("failing candidates are scored infinite and reported") {
    VqeRecipe recipe = small_recipe(40, 9);
    recipe.optimizer_kind = OptimizerKind::gd;
    recipe.gamma0 = 1e305;

    TunerConfig config;
    config.candidates = {1e-9, 1.0};
    config.test_budget = 9;
    config.target_budget = 9;
    config.runs_per_candidate = 1;
    config.profile_window = 10;
    config.master_seed = 11;

    const TunerResult result = tune(config, recipe);
    CHECK(result.h_test == doctest::Approx(1.0));
    CHECK(std::isinf(result.profiles.at(1e-9)));
    CHECK(!result.failures.empty());
}
