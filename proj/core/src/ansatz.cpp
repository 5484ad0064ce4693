#include "qugstep/ansatz.hpp"

#include <set>

#include "qugstep/errors.hpp"

namespace qugstep {

int gate_param_index(const Gate& g) {
    return std::visit(
        [](const auto& gate) -> int {
            using T = std::decay_t<decltype(gate)>;
            if constexpr (std::is_same_v<T, CnotGate>) {
                return -1;
            } else {
                return gate.param_index;
            }
        },
        g);
}

Ansatz::Ansatz(int n_qubits, std::string reference, std::vector<Gate> gates,
               int n_params, std::vector<double> initial_params)
    : n_qubits_(n_qubits),
      reference_(std::move(reference)),
      gates_(std::move(gates)),
      n_params_(n_params),
      initial_params_(std::move(initial_params)) {
    if (static_cast<int>(reference_.size()) != n_qubits_) {
        throw ArgumentError("reference bitstring length does not match qubit count");
    }
    if (n_params_ < 0) throw ArgumentError("negative parameter count");
    if (initial_params_.empty()) {
        initial_params_.assign(static_cast<std::size_t>(n_params_), 0.0);
    }
    if (static_cast<int>(initial_params_.size()) != n_params_) {
        throw ArgumentError("initial parameter vector length does not match n_params");
    }

    std::set<int> used;
    for (const Gate& g : gates_) {
        const int p = gate_param_index(g);
        if (p >= 0) {
            if (p >= n_params_) {
                throw ArgumentError("gate references parameter " + std::to_string(p) +
                                    " but ansatz has " + std::to_string(n_params_));
            }
            used.insert(p);
        }
        std::visit(
            [&](const auto& gate) {
                using T = std::decay_t<decltype(gate)>;
                if constexpr (std::is_same_v<T, PauliRotationGate>) {
                    if (gate.string.n_qubits() != n_qubits_) {
                        throw ArgumentError("rotation generator size mismatch");
                    }
                } else if constexpr (std::is_same_v<T, CnotGate>) {
                    if (gate.control < 0 || gate.control >= n_qubits_ ||
                        gate.target < 0 || gate.target >= n_qubits_ ||
                        gate.control == gate.target) {
                        throw ArgumentError("bad CNOT qubits");
                    }
                } else {
                    if (gate.qubit < 0 || gate.qubit >= n_qubits_) {
                        throw ArgumentError("rotation qubit out of range");
                    }
                }
            },
            g);
    }
    if (static_cast<int>(used.size()) != n_params_) {
        throw ArgumentError("every parameter index must be referenced by some gate");
    }
}

StateVector Ansatz::prepare(const std::vector<double>& params) const {
    return prepare_shifted(params, gates_.size(), 0.0);
}

StateVector Ansatz::prepare_shifted(const std::vector<double>& params,
                                    std::size_t gate_index, double offset) const {
    if (static_cast<int>(params.size()) != n_params_) {
        throw ArgumentError("parameter vector has length " +
                            std::to_string(params.size()) + ", ansatz needs " +
                            std::to_string(n_params_));
    }
    StateVector state(reference_);
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        const double extra = (k == gate_index) ? offset : 0.0;
        std::visit(
            [&](const auto& gate) {
                using T = std::decay_t<decltype(gate)>;
                if constexpr (std::is_same_v<T, PauliRotationGate>) {
                    state.apply_pauli_rotation(
                        gate.string, params[static_cast<std::size_t>(gate.param_index)] + extra);
                } else if constexpr (std::is_same_v<T, RotYGate>) {
                    state.apply_rot_y(gate.qubit,
                                      params[static_cast<std::size_t>(gate.param_index)] + extra);
                } else if constexpr (std::is_same_v<T, RotZGate>) {
                    state.apply_rot_z(gate.qubit,
                                      params[static_cast<std::size_t>(gate.param_index)] + extra);
                } else {
                    state.apply_cnot(gate.control, gate.target);
                }
            },
            gates_[k]);
    }
    return state;
}

double exact_energy_at(const Ansatz& ansatz, const std::vector<double>& params,
                       const Hamiltonian& h) {
    return exact_energy(ansatz.prepare(params), h);
}

}  // namespace qugstep
