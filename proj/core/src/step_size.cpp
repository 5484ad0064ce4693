#include "qugstep/step_size.hpp"

#include <cmath>

#include "qugstep/errors.hpp"

namespace qugstep {

double error_bound(double mu, double sigma, double step, long long shots) {
    if (!(step > 0.0)) throw ArgumentError("error_bound needs h > 0");
    if (!(mu > 0.0)) throw ArgumentError("error_bound needs mu > 0");
    if (sigma < 0.0) throw ArgumentError("error_bound needs sigma >= 0");
    if (shots < 1) throw ArgumentError("error_bound needs N >= 1");
    const double truncation = 0.25 * mu * mu * step * step;
    const double noise =
        2.0 * sigma * sigma / (step * step * static_cast<double>(shots));
    return truncation + noise;
}

double optimal_step(double mu, double sigma, long long shots) {
    if (!(mu > 0.0)) {
        throw ArgumentError("optimal_step needs mu > 0 (the bound has no interior minimum)");
    }
    if (!(sigma > 0.0)) throw ArgumentError("optimal_step needs sigma > 0");
    if (shots < 1) throw ArgumentError("optimal_step needs N >= 1");
    return std::pow(8.0, 0.25) * std::sqrt(sigma) /
           (std::sqrt(mu) * std::pow(static_cast<double>(shots), 0.25));
}

double scale_step(double h_hat, long long n_hat, long long n) {
    if (!(h_hat > 0.0)) throw ArgumentError("scale_step needs h > 0");
    if (n_hat < 1 || n < 1) throw ArgumentError("scale_step needs positive budgets");
    return h_hat * std::pow(static_cast<double>(n_hat) / static_cast<double>(n), 0.25);
}

double performance_profile(const std::vector<double>& trace, std::size_t window) {
    if (window < 1) throw ArgumentError("profile window must be >= 1");
    if (trace.size() < window) {
        throw ArgumentError("trace of length " + std::to_string(trace.size()) +
                            " is shorter than profile window " + std::to_string(window));
    }
    double sum = 0.0;
    for (std::size_t i = trace.size() - window; i < trace.size(); ++i) {
        sum += trace[i];
    }
    return sum / static_cast<double>(window);
}

}  // namespace qugstep
