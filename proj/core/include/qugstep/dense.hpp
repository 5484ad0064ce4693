#pragma once

#include <Eigen/Dense>

#include "qugstep/pauli.hpp"

namespace qugstep {

// 2^n x 2^n Hermitian matrix of a Pauli string / Hamiltonian, built by
// Kronecker products with qubit 0 as the most significant index bit
// (matching the StateVector index convention). Exact-diagonalization
// oracle for tests and reference energies; capped at kMaxQubits.
Eigen::MatrixXcd dense_matrix(const PauliString& p);
Eigen::MatrixXcd dense_matrix(const Hamiltonian& h);

// Minimum eigenvalue of dense_matrix(h), via a self-adjoint eigensolver.
double ground_energy(const Hamiltonian& h);

}  // namespace qugstep
