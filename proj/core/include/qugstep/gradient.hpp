#pragma once

#include <functional>
#include <vector>

#include "qugstep/ansatz.hpp"
#include "qugstep/pauli.hpp"

namespace qugstep {

using EnergyFn = std::function<double(const std::vector<double>&)>;

struct GradientEstimate {
    std::vector<double> values;
    long long evaluations_used = 0;
    long long shots_used = 0;
    double baseline_energy = 0.0;  // the shared noisy E(theta)

    double inf_norm() const;
};

// Forward finite difference against a (noisy) energy oracle: one baseline
// evaluation shared by all components, then one perturbed evaluation per
// component — d+1 oracle calls in total. Component i is
// (E(theta + h e_i) - E(theta)) / h.
GradientEstimate forward_diff(const EnergyFn& oracle, const std::vector<double>& params,
                              double step, long long shots_per_eval = 0);

// Exact gradient via the parameter-shift rule, as a noiseless test oracle.
// For a gate occurrence with generator eigenvalues +-r the contribution is
// r * [E(theta + pi/(4r) at that occurrence) - E(theta - pi/(4r))], summed
// over all occurrences of each parameter. r = 1 for full-angle Pauli
// rotations, r = 1/2 for RotY/RotZ.
std::vector<double> parameter_shift_grad(const Ansatz& ansatz,
                                         const std::vector<double>& params,
                                         const Hamiltonian& h);

// E''(theta) for an ansatz consisting of exactly one full-angle Pauli
// rotation, computed from the nested-commutator identity
// E'' = -<psi|[P,[P,H]]|psi> via dense matrices.
double second_derivative_exact(const Ansatz& ansatz, double theta, const Hamiltonian& h);

}  // namespace qugstep
