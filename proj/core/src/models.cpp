#include "qugstep/models.hpp"

#include <array>
#include <string>

#include "qugstep/errors.hpp"

namespace qugstep {

std::pair<Hamiltonian, Ansatz> builtin_h2(const std::filesystem::path& coefficients) {
    if (!std::filesystem::exists(coefficients)) {
        throw ConfigError("missing coefficient file for the built-in two-qubit model: " +
                          coefficients.string() +
                          " (expected `<coefficient> <label>` lines for II, ZI, IZ, ZZ, YY, XX)");
    }
    Hamiltonian h = Hamiltonian::load(coefficients);
    if (h.n_qubits() != 2) {
        throw ConfigError("built-in two-qubit model needs 2-qubit labels, file has " +
                          std::to_string(h.n_qubits()));
    }
    static constexpr std::array<const char*, 6> expected = {"II", "ZI", "IZ",
                                                            "ZZ", "YY", "XX"};
    if (h.n_terms() != expected.size()) {
        throw ConfigError("built-in two-qubit model needs exactly 6 terms, file has " +
                          std::to_string(h.n_terms()));
    }
    for (const char* label : expected) {
        const PauliString want = PauliString::parse(label, 2);
        bool present = false;
        for (const PauliTerm& t : h.terms()) {
            if (t.string == want) {
                present = true;
                break;
            }
        }
        if (!present) {
            throw ConfigError("built-in two-qubit model is missing the " +
                              std::string(label) + " term in " + coefficients.string());
        }
    }

    std::vector<Gate> gates;
    gates.push_back(PauliRotationGate{PauliString::parse("XY", 2), 0});
    Ansatz ansatz(2, "01", std::move(gates), 1, {0.0});
    return {std::move(h), std::move(ansatz)};
}

Ansatz builtin_hw_efficient(int n_qubits, int layers, bool two_rotations, double init) {
    if (n_qubits < 2) throw ArgumentError("hardware-efficient ansatz needs >= 2 qubits");
    if (layers < 1) throw ArgumentError("hardware-efficient ansatz needs >= 1 layer");

    std::vector<Gate> gates;
    int param = 0;
    for (int layer = 0; layer < layers; ++layer) {
        for (int q = 0; q < n_qubits; ++q) {
            gates.push_back(RotYGate{q, param++});
        }
        if (two_rotations) {
            for (int q = 0; q < n_qubits; ++q) {
                gates.push_back(RotZGate{q, param++});
            }
        }
        for (int q = 0; q + 1 < n_qubits; ++q) {
            gates.push_back(CnotGate{q, q + 1});
        }
    }
    const std::string reference(static_cast<std::size_t>(n_qubits), '0');
    std::vector<double> initial(static_cast<std::size_t>(param), init);
    return Ansatz(n_qubits, reference, std::move(gates), param, std::move(initial));
}

}  // namespace qugstep
