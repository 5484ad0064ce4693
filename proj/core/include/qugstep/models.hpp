#pragma once

#include <filesystem>
#include <utility>

#include "qugstep/ansatz.hpp"
#include "qugstep/pauli.hpp"

namespace qugstep {

// Default location of the shipped two-qubit model coefficients, relative to
// the working directory.
inline constexpr const char* kDefaultH2File = "data/h2_model.txt";

// The reduced two-qubit molecular model: a Hamiltonian with exactly the six
// strings {II, ZI, IZ, ZZ, YY, XX} (coefficients read from `coefficients`)
// and a single-parameter coupled-cluster ansatz on the |01> reference.
//
// The rotation generator is X0 Y1: the odd Y count keeps the rotated state
// real, which is what lets the one-parameter circuit reach the ground state
// of the real two-level block the reference couples to.
std::pair<Hamiltonian, Ansatz> builtin_h2(
    const std::filesystem::path& coefficients = kDefaultH2File);

// Layered hardware-efficient ansatz on the all-zeros reference: per layer,
// RotY on every qubit (plus RotZ when two_rotations), then a linear CNOT
// chain (qubit i controls i+1). Parameter count is
// n_qubits * layers * (two_rotations ? 2 : 1); every parameter starts at
// `init`.
Ansatz builtin_hw_efficient(int n_qubits, int layers, bool two_rotations, double init);

}  // namespace qugstep
