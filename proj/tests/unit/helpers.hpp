#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qugstep/ansatz.hpp"
#include "qugstep/pauli.hpp"
#include "qugstep/rng.hpp"

namespace test_helpers {

inline qugstep::PauliString random_pauli_string(qugstep::Rng& rng, int n_qubits,
                                                bool allow_identity = true) {
    std::vector<qugstep::Pauli> letters;
    do {
        letters.clear();
        for (int q = 0; q < n_qubits; ++q) {
            letters.push_back(static_cast<qugstep::Pauli>(rng.next_u32() % 4));
        }
    } while (!allow_identity &&
             std::all_of(letters.begin(), letters.end(),
                         [](qugstep::Pauli p) { return p == qugstep::Pauli::I; }));
    return qugstep::PauliString(letters);
}

inline qugstep::Hamiltonian random_hamiltonian(qugstep::Rng& rng, int n_qubits,
                                               int n_terms, double scale = 1.0) {
    std::vector<qugstep::PauliTerm> terms;
    for (int t = 0; t < n_terms; ++t) {
        const double c = scale * (2.0 * rng.uniform() - 1.0);
        terms.push_back({c, random_pauli_string(rng, n_qubits)});
    }
    return qugstep::Hamiltonian(n_qubits, std::move(terms));
}

// Random hardware-efficient-style circuit with a mix of gate kinds; every
// parameter used exactly once.
inline qugstep::Ansatz random_ansatz(qugstep::Rng& rng, int n_qubits, int n_params) {
    std::vector<qugstep::Gate> gates;
    int param = 0;
    while (param < n_params) {
        const int choice = static_cast<int>(rng.next_u32() % 4);
        const int q = static_cast<int>(rng.next_u32() % static_cast<unsigned>(n_qubits));
        if (choice == 0) {
            gates.push_back(qugstep::RotYGate{q, param++});
        } else if (choice == 1) {
            gates.push_back(qugstep::RotZGate{q, param++});
        } else if (choice == 2 && n_qubits >= 2) {
            int t = static_cast<int>(rng.next_u32() % static_cast<unsigned>(n_qubits));
            if (t == q) t = (t + 1) % n_qubits;
            gates.push_back(qugstep::CnotGate{q, t});
        } else {
            gates.push_back(qugstep::PauliRotationGate{
                random_pauli_string(rng, n_qubits, false), param++});
        }
    }
    const std::string reference(static_cast<std::size_t>(n_qubits), '0');
    return qugstep::Ansatz(n_qubits, reference, std::move(gates), n_params, {});
}

inline std::vector<double> random_params(qugstep::Rng& rng, int n, double span = 3.0) {
    std::vector<double> p(static_cast<std::size_t>(n));
    for (double& x : p) x = span * (2.0 * rng.uniform() - 1.0);
    return p;
}

}  // namespace test_helpers
