#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qugstep/pauli.hpp"
#include "qugstep/statevector.hpp"

namespace qugstep {

// Gate descriptors. Rotation conventions:
//   PauliRotationGate  exp(-i theta P), full angle
//   RotYGate, RotZGate exp(-i theta Y/2), exp(-i theta Z/2), half angle
// Parameter-shift factors in the gradient module depend on this split.
struct PauliRotationGate {
    PauliString string;
    int param_index;
};
struct RotYGate {
    int qubit;
    int param_index;
};
struct RotZGate {
    int qubit;
    int param_index;
};
struct CnotGate {
    int control;
    int target;
};

using Gate = std::variant<PauliRotationGate, RotYGate, RotZGate, CnotGate>;

// Returns the gate's parameter index, or -1 for unparameterized gates.
int gate_param_index(const Gate& g);

// A parameterized circuit applied to a computational-basis reference state.
class Ansatz {
  public:
    Ansatz(int n_qubits, std::string reference, std::vector<Gate> gates,
           int n_params, std::vector<double> initial_params);

    int n_qubits() const { return n_qubits_; }
    const std::string& reference() const { return reference_; }
    const std::vector<Gate>& gates() const { return gates_; }
    int n_params() const { return n_params_; }
    const std::vector<double>& initial_params() const { return initial_params_; }

    // Reference state with all gates applied in order.
    StateVector prepare(const std::vector<double>& params) const;

    // Same, with an additive angle offset applied to one gate occurrence
    // (used by the parameter-shift rule, which shifts occurrences, not
    // parameters).
    StateVector prepare_shifted(const std::vector<double>& params,
                                std::size_t gate_index, double offset) const;

  private:
    int n_qubits_;
    std::string reference_;
    std::vector<Gate> gates_;
    int n_params_;
    std::vector<double> initial_params_;
};

double exact_energy_at(const Ansatz& ansatz, const std::vector<double>& params,
                       const Hamiltonian& h);

}  // namespace qugstep
