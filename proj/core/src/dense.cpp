#include "qugstep/dense.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "qugstep/errors.hpp"
#include "qugstep/statevector.hpp"

namespace qugstep {

namespace {

Eigen::Matrix2cd single_qubit(Pauli p) {
    const std::complex<double> i{0.0, 1.0};
    Eigen::Matrix2cd m;
    switch (p) {
        case Pauli::I: m << 1, 0, 0, 1; break;
        case Pauli::X: m << 0, 1, 1, 0; break;
        case Pauli::Y: m << 0, -i, i, 0; break;
        case Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const PauliString& p) {
    const int n = p.n_qubits();
    if (n > kMaxQubits) {
        throw ArgumentError("dense matrix capped at " + std::to_string(kMaxQubits) +
                            " qubits, got " + std::to_string(n));
    }
    // Qubit 0 is the outermost Kronecker factor (most significant index bit).
    Eigen::MatrixXcd m = single_qubit(p.letter(0));
    for (int q = 1; q < n; ++q) {
        m = Eigen::kroneckerProduct(m, single_qubit(p.letter(q))).eval();
    }
    return m;
}

Eigen::MatrixXcd dense_matrix(const Hamiltonian& h) {
    const int n = h.n_qubits();
    if (n > kMaxQubits) {
        throw ArgumentError("dense matrix capped at " + std::to_string(kMaxQubits) +
                            " qubits, got " + std::to_string(n));
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    for (const PauliTerm& t : h.terms()) {
        m += t.coefficient * dense_matrix(t.string);
    }
    return m;
}

double ground_energy(const Hamiltonian& h) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(h),
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

}  // namespace qugstep
