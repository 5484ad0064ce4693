#include "qugstep/gradient.hpp"

#include <cmath>

#include "qugstep/dense.hpp"
#include "qugstep/errors.hpp"

namespace qugstep {

double GradientEstimate::inf_norm() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

GradientEstimate forward_diff(const EnergyFn& oracle, const std::vector<double>& params,
                              double step, long long shots_per_eval) {
    if (!(step > 0.0)) {
        throw ArgumentError("finite-difference step must be positive");
    }
    for (double p : params) {
        if (!std::isfinite(p)) throw ArgumentError("non-finite parameter");
    }

    GradientEstimate est;
    est.baseline_energy = oracle(params);
    if (!std::isfinite(est.baseline_energy)) {
        throw NumericError("energy oracle returned a non-finite baseline");
    }
    est.values.resize(params.size());

    std::vector<double> shifted = params;
    for (std::size_t i = 0; i < params.size(); ++i) {
        shifted[i] = params[i] + step;
        const double e = oracle(shifted);
        shifted[i] = params[i];
        if (!std::isfinite(e)) {
            throw NumericError("energy oracle returned a non-finite value at component " +
                               std::to_string(i));
        }
        est.values[i] = (e - est.baseline_energy) / step;
    }
    est.evaluations_used = static_cast<long long>(params.size()) + 1;
    est.shots_used = est.evaluations_used * shots_per_eval;
    return est;
}

std::vector<double> parameter_shift_grad(const Ansatz& ansatz,
                                         const std::vector<double>& params,
                                         const Hamiltonian& h) {
    std::vector<double> grad(params.size(), 0.0);
    const auto& gates = ansatz.gates();
    for (std::size_t k = 0; k < gates.size(); ++k) {
        const int p = gate_param_index(gates[k]);
        if (p < 0) continue;
        const bool full_angle = std::holds_alternative<PauliRotationGate>(gates[k]);
        const double r = full_angle ? 1.0 : 0.5;
        const double shift = 0.25 * 3.14159265358979323846 / r;
        const double plus = exact_energy(ansatz.prepare_shifted(params, k, +shift), h);
        const double minus = exact_energy(ansatz.prepare_shifted(params, k, -shift), h);
        grad[static_cast<std::size_t>(p)] += r * (plus - minus);
    }
    return grad;
}

double second_derivative_exact(const Ansatz& ansatz, double theta, const Hamiltonian& h) {
    if (ansatz.gates().size() != 1 ||
        !std::holds_alternative<PauliRotationGate>(ansatz.gates()[0])) {
        throw CapabilityError(
            "second_derivative_exact needs an ansatz with exactly one Pauli rotation");
    }
    const PauliString& p = std::get<PauliRotationGate>(ansatz.gates()[0]).string;

    const Eigen::MatrixXcd hm = dense_matrix(h);
    const Eigen::MatrixXcd pm = dense_matrix(p);
    const Eigen::MatrixXcd inner = pm * hm - hm * pm;   // [P, H]
    const Eigen::MatrixXcd nested = pm * inner - inner * pm;  // [P, [P, H]]

    const StateVector state = ansatz.prepare({theta});
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(state.dim()));
    for (std::size_t b = 0; b < state.dim(); ++b) {
        psi[static_cast<Eigen::Index>(b)] = state.amplitude(b);
    }
    const std::complex<double> value = psi.dot(nested * psi);
    return -value.real();
}

}  // namespace qugstep
