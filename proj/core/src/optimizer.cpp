#include "qugstep/optimizer.hpp"

#include <cmath>

#include "qugstep/errors.hpp"

namespace qugstep {

OptimizerKind optimizer_kind_from_name(const std::string& name) {
    if (name == "gd") return OptimizerKind::gd;
    if (name == "mgd") return OptimizerKind::mgd;
    if (name == "adagrad") return OptimizerKind::adagrad;
    if (name == "rmsprop") return OptimizerKind::rmsprop;
    if (name == "adam") return OptimizerKind::adam;
    throw ConfigError("unknown optimizer kind: " + name);
}

std::string optimizer_kind_name(OptimizerKind kind) {
    switch (kind) {
        case OptimizerKind::gd: return "gd";
        case OptimizerKind::mgd: return "mgd";
        case OptimizerKind::adagrad: return "adagrad";
        case OptimizerKind::rmsprop: return "rmsprop";
        case OptimizerKind::adam: return "adam";
    }
    return "?";
}

Optimizer::Optimizer(OptimizerKind kind, std::size_t dimension,
                     OptimizerHyperparams hyper)
    : kind_(kind), hyper_(hyper) {
    if (kind == OptimizerKind::mgd || kind == OptimizerKind::adam) {
        first_.assign(dimension, 0.0);
    }
    if (kind != OptimizerKind::gd && kind != OptimizerKind::mgd) {
        second_.assign(dimension, 0.0);
    }
}

void Optimizer::update(std::vector<double>& params, const std::vector<double>& grad,
                       double rate) {
    if (params.size() != grad.size()) {
        throw ArgumentError("gradient length does not match parameter length");
    }
    if (rate < 0.0) throw ArgumentError("negative learning rate");
    const std::size_t d = params.size();
    ++step_count_;

    switch (kind_) {
        case OptimizerKind::gd:
            for (std::size_t i = 0; i < d; ++i) params[i] -= rate * grad[i];
            break;
        case OptimizerKind::mgd:
            for (std::size_t i = 0; i < d; ++i) {
                first_[i] = hyper_.momentum * first_[i] + grad[i];
                params[i] -= rate * first_[i];
            }
            break;
        case OptimizerKind::adagrad:
            for (std::size_t i = 0; i < d; ++i) {
                second_[i] += grad[i] * grad[i];
                params[i] -= rate * grad[i] / (std::sqrt(second_[i]) + hyper_.epsilon);
            }
            break;
        case OptimizerKind::rmsprop:
            for (std::size_t i = 0; i < d; ++i) {
                second_[i] = hyper_.rms_decay * second_[i] +
                             (1.0 - hyper_.rms_decay) * grad[i] * grad[i];
                params[i] -= rate * grad[i] / (std::sqrt(second_[i]) + hyper_.epsilon);
            }
            break;
        case OptimizerKind::adam: {
            const double b1 = hyper_.adam_beta1;
            const double b2 = hyper_.adam_beta2;
            const double c1 = 1.0 - std::pow(b1, static_cast<double>(step_count_));
            const double c2 = 1.0 - std::pow(b2, static_cast<double>(step_count_));
            for (std::size_t i = 0; i < d; ++i) {
                first_[i] = b1 * first_[i] + (1.0 - b1) * grad[i];
                second_[i] = b2 * second_[i] + (1.0 - b2) * grad[i] * grad[i];
                const double mhat = first_[i] / c1;
                const double vhat = second_[i] / c2;
                params[i] -= rate * mhat / (std::sqrt(vhat) + hyper_.epsilon);
            }
            break;
        }
    }
}

double Schedule::rate_at(long long t) const {
    if (t < 0 || t > total_iterations) {
        throw ArgumentError("schedule evaluated outside [0, T]: t = " + std::to_string(t));
    }
    if (kind == ScheduleKind::constant) return gamma0;
    const double x = 3.14159265358979323846 * static_cast<double>(t) /
                     static_cast<double>(total_iterations);
    return gamma0 * 0.5 * (std::cos(x) + 1.0);
}

}  // namespace qugstep
