#pragma once

#include <vector>

namespace qugstep {

// Upper bound on the mean squared error of a forward-difference gradient
// component under shot noise:
//   (1/4) mu^2 h^2  +  2 sigma^2 / (h^2 N)
// where mu bounds |E''| and sigma bounds the single-evaluation noise scale.
double error_bound(double mu, double sigma, double step, long long shots);

// Closed-form minimizer of error_bound in h:
//   h_N = 8^(1/4) sqrt(sigma) / (sqrt(mu) N^(1/4)).
// At h_N the two bound terms are equal (AM-GM equality).
double optimal_step(double mu, double sigma, long long shots);

// Budget-scaling relation: a step tuned at a test budget n_hat transfers to
// a target budget n as  h_n = h_hat / (n / n_hat)^(1/4).
double scale_step(double h_hat, long long n_hat, long long n);

// Mean of the last `window` entries of an optimization trace; the figure of
// merit used to compare candidate step sizes.
double performance_profile(const std::vector<double>& trace, std::size_t window);

}  // namespace qugstep
