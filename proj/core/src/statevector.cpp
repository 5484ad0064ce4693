#include "qugstep/statevector.hpp"

#include <bit>
#include <cmath>

#include "qugstep/errors.hpp"

namespace qugstep {

namespace {

// Phase picked up by basis state |b> under a Pauli string: i^{#Y} times a
// sign from the Y/Z phase-flip mask.
inline std::complex<double> pauli_phase(const PauliString& p, std::uint64_t b) {
    static const std::complex<double> i_pow[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    std::complex<double> phase = i_pow[p.y_count() & 3];
    if (std::popcount(b & p.z_mask()) & 1) phase = -phase;
    return phase;
}

}  // namespace

StateVector::StateVector(const std::string& bitstring)
    : n_qubits_(static_cast<int>(bitstring.size())) {
    if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
        throw ArgumentError("state size out of range: " + bitstring);
    }
    std::size_t index = 0;
    for (char c : bitstring) {
        if (c != '0' && c != '1') {
            throw ParseError("reference bitstring must be over {0,1}: " + bitstring);
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    amps_.assign(std::size_t{1} << n_qubits_, {0.0, 0.0});
    amps_[index] = {1.0, 0.0};
}

StateVector::StateVector(int n_qubits, std::size_t basis_index) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ArgumentError("qubit count out of range");
    }
    amps_.assign(std::size_t{1} << n_qubits, {0.0, 0.0});
    if (basis_index >= amps_.size()) throw ArgumentError("basis index out of range");
    amps_[basis_index] = {1.0, 0.0};
}

void StateVector::check_qubit(int qubit) const {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw ArgumentError("qubit index " + std::to_string(qubit) + " out of range");
    }
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

void StateVector::apply_pauli(const PauliString& p) {
    if (p.n_qubits() != n_qubits_) throw ArgumentError("Pauli string size mismatch");
    const std::uint64_t xm = p.x_mask();
    std::vector<std::complex<double>> out(amps_.size());
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        out[b ^ xm] = pauli_phase(p, b) * amps_[b];
    }
    amps_ = std::move(out);
}

void StateVector::apply_pauli_rotation(const PauliString& p, double theta) {
    if (p.n_qubits() != n_qubits_) throw ArgumentError("Pauli string size mismatch");
    const double c = std::cos(theta);
    const std::complex<double> ms{0.0, -std::sin(theta)};
    const std::uint64_t xm = p.x_mask();
    std::vector<std::complex<double>> out(amps_.size());
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        out[b ^ xm] = ms * pauli_phase(p, b) * amps_[b];
    }
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        out[b] += c * amps_[b];
    }
    amps_ = std::move(out);
}

void StateVector::apply_rot_y(int qubit, double theta) {
    check_qubit(qubit);
    const std::uint64_t bit = qubit_bit(qubit);
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        if (b & bit) continue;
        const std::complex<double> a0 = amps_[b];
        const std::complex<double> a1 = amps_[b | bit];
        amps_[b] = c * a0 - s * a1;
        amps_[b | bit] = s * a0 + c * a1;
    }
}

void StateVector::apply_rot_z(int qubit, double theta) {
    check_qubit(qubit);
    const std::uint64_t bit = qubit_bit(qubit);
    const std::complex<double> e0{std::cos(0.5 * theta), -std::sin(0.5 * theta)};
    const std::complex<double> e1 = std::conj(e0);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        amps_[b] *= (b & bit) ? e1 : e0;
    }
}

void StateVector::apply_cnot(int control, int target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) throw ArgumentError("CNOT control equals target");
    const std::uint64_t cbit = qubit_bit(control);
    const std::uint64_t tbit = qubit_bit(target);
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        if ((b & cbit) && !(b & tbit)) {
            std::swap(amps_[b], amps_[b | tbit]);
        }
    }
}

void StateVector::apply_hadamard(int qubit) {
    check_qubit(qubit);
    const std::uint64_t bit = qubit_bit(qubit);
    const double r = 0.70710678118654752440;
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        if (b & bit) continue;
        const std::complex<double> a0 = amps_[b];
        const std::complex<double> a1 = amps_[b | bit];
        amps_[b] = r * (a0 + a1);
        amps_[b | bit] = r * (a0 - a1);
    }
}

void StateVector::apply_s_dagger(int qubit) {
    check_qubit(qubit);
    const std::uint64_t bit = qubit_bit(qubit);
    const std::complex<double> mi{0.0, -1.0};
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        if (b & bit) amps_[b] *= mi;
    }
}

std::complex<double> StateVector::inner(const StateVector& other) const {
    if (other.n_qubits_ != n_qubits_) throw ArgumentError("state size mismatch");
    std::complex<double> s{0.0, 0.0};
    for (std::size_t b = 0; b < amps_.size(); ++b) {
        s += std::conj(amps_[b]) * other.amps_[b];
    }
    return s;
}

double StateVector::pauli_expectation(const PauliString& p) const {
    if (p.n_qubits() != n_qubits_) throw ArgumentError("Pauli string size mismatch");
    const std::uint64_t xm = p.x_mask();
    std::complex<double> s{0.0, 0.0};
    for (std::uint64_t b = 0; b < amps_.size(); ++b) {
        s += std::conj(amps_[b ^ xm]) * pauli_phase(p, b) * amps_[b];
    }
    return s.real();
}

double exact_energy(const StateVector& state, const Hamiltonian& h) {
    if (h.n_qubits() != state.n_qubits()) {
        throw ArgumentError("Hamiltonian acts on " + std::to_string(h.n_qubits()) +
                            " qubits, state has " + std::to_string(state.n_qubits()));
    }
    double e = 0.0;
    for (const PauliTerm& t : h.terms()) {
        e += t.coefficient * state.pauli_expectation(t.string);
    }
    return e;
}

}  // namespace qugstep
