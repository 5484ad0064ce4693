#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qugstep/pauli.hpp"

namespace qugstep {

inline constexpr int kMaxQubits = 12;  // dense amplitude cap

// Dense complex amplitude vector of length 2^n. Basis index bit (n-1-q)
// holds qubit q, so index 0b01 on two qubits is the bitstring "01"
// (qubit 0 = '0', qubit 1 = '1').
class StateVector {
  public:
    // Computational-basis state for a '0'/'1' bitstring, character i = qubit i.
    explicit StateVector(const std::string& bitstring);
    StateVector(int n_qubits, std::size_t basis_index);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    const std::vector<std::complex<double>>& amplitudes() const { return amps_; }
    std::complex<double> amplitude(std::size_t index) const { return amps_[index]; }

    double norm() const;

    // exp(-i theta P): cos(theta)|psi> - i sin(theta) P|psi>. Valid because
    // P^2 = I.
    void apply_pauli_rotation(const PauliString& p, double theta);
    // Half-angle conventions: exp(-i theta Y/2), exp(-i theta Z/2).
    void apply_rot_y(int qubit, double theta);
    void apply_rot_z(int qubit, double theta);
    void apply_cnot(int control, int target);

    // |psi> <- P|psi>
    void apply_pauli(const PauliString& p);

    // Single-qubit basis changes used to rotate a measurement basis onto Z:
    // Hadamard maps X to Z; S-dagger then Hadamard maps Y to Z.
    void apply_hadamard(int qubit);
    void apply_s_dagger(int qubit);

    std::complex<double> inner(const StateVector& other) const;

    // <psi|P|psi>, exact.
    double pauli_expectation(const PauliString& p) const;

  private:
    void check_qubit(int qubit) const;
    std::uint64_t qubit_bit(int qubit) const {
        return 1ULL << (n_qubits_ - 1 - qubit);
    }

    int n_qubits_;
    std::vector<std::complex<double>> amps_;
};

// <psi|H|psi>, computed term by term by applying each Pauli string to a
// copy of the state. Always real for real coefficients.
double exact_energy(const StateVector& state, const Hamiltonian& h);

}  // namespace qugstep
