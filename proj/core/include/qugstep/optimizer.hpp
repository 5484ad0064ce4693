#pragma once

#include <string>
#include <vector>

namespace qugstep {

enum class OptimizerKind { gd, mgd, adagrad, rmsprop, adam };

OptimizerKind optimizer_kind_from_name(const std::string& name);
std::string optimizer_kind_name(OptimizerKind kind);

struct OptimizerHyperparams {
    double momentum = 0.9;       // mgd beta
    double rms_decay = 0.9;      // rmsprop rho
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double epsilon = 1e-8;
};

// First-order update state. Update rules:
//   gd       theta - rate * g
//   mgd      v <- beta v + g;           theta - rate * v
//   adagrad  a <- a + g^2;              theta - rate * g / (sqrt(a) + eps)
//   rmsprop  a <- rho a + (1 - rho) g^2; theta - rate * g / (sqrt(a) + eps)
//   adam     bias-corrected first/second moments with (beta1, beta2)
class Optimizer {
  public:
    Optimizer(OptimizerKind kind, std::size_t dimension,
              OptimizerHyperparams hyper = {});

    // Applies one update in place; increments the step count by exactly 1.
    void update(std::vector<double>& params, const std::vector<double>& grad,
                double rate);

    OptimizerKind kind() const { return kind_; }
    long long step_count() const { return step_count_; }

  private:
    OptimizerKind kind_;
    OptimizerHyperparams hyper_;
    long long step_count_ = 0;
    std::vector<double> first_;
    std::vector<double> second_;
};

enum class ScheduleKind { constant, cosine };

// Learning-rate schedule over T total iterations. The cosine decay scales
// gamma0 by 0.5 (cos(pi t / T) + 1): gamma0 at t = 0, zero at t = T.
struct Schedule {
    ScheduleKind kind = ScheduleKind::cosine;
    double gamma0 = 0.1;
    long long total_iterations = 200;

    double rate_at(long long t) const;
};

}  // namespace qugstep
