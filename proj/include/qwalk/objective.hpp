// Loss functions between trained and targeted distributions, and the combined
// objective the optimizer minimizes.

#pragma once

#include <qwalk/walk.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace qwalk {

// A normalized probability vector over 2^N bins with real-valued bin labels
// (return percentage, trial count, or price level).
struct TargetDistribution {
    Eigen::VectorXd probs;
    Eigen::VectorXd bin_labels;
    std::string name;

    void validate() const {
        if (probs.size() == 0) throw std::invalid_argument(name + ": empty distribution");
        if (probs.size() != bin_labels.size()) {
            throw std::invalid_argument(name + ": probs/labels length mismatch");
        }
        if (probs.minCoeff() < -1e-12) {
            throw std::invalid_argument(name + ": negative probability");
        }
        if (std::abs(probs.sum() - 1.0) > 1e-9) {
            throw std::invalid_argument(name + ": probabilities do not sum to 1");
        }
        for (Eigen::Index i = 1; i < bin_labels.size(); ++i) {
            if (!(bin_labels[i] > bin_labels[i - 1])) {
                throw std::invalid_argument(name + ": bin labels not strictly increasing");
            }
        }
    }
};

struct LossReport {
    double mse = 0.0;
    double kl = 0.0;
    double combined = 0.0;
};

inline constexpr double kKlEpsilon = 1e-10;

inline double mse(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    if (p.size() != q.size()) throw std::invalid_argument("mse: length mismatch");
    return (p - q).squaredNorm() / static_cast<double>(p.size());
}

// D(target || trained) with the trained side floored at epsilon and no
// renormalization; penalizes trained mass missing where the target has mass.
inline double kl_divergence(const Eigen::VectorXd& target, const Eigen::VectorXd& trained,
                            double epsilon = kKlEpsilon) {
    if (target.size() != trained.size()) {
        throw std::invalid_argument("kl_divergence: length mismatch");
    }
    if (!(epsilon > 0.0)) throw std::invalid_argument("kl_divergence: epsilon must be > 0");
    double acc = 0.0;
    for (Eigen::Index i = 0; i < target.size(); ++i) {
        if (target[i] > 0.0) {
            acc += target[i] * std::log(target[i] / std::max(trained[i], epsilon));
        }
    }
    return acc;
}

inline double total_variation(const Eigen::VectorXd& p, const Eigen::VectorXd& q) {
    if (p.size() != q.size()) throw std::invalid_argument("total_variation: length mismatch");
    return 0.5 * (p - q).template lpNorm<1>();
}

// Runs the circuit for the given flat parameter vector and scores it against
// the target: combined = mse + kl_weight * kl.
inline LossReport evaluate(const Eigen::VectorXd& params, const MultiSSQWConfig& config,
                           const TargetDistribution& target, double kl_weight = 1.0,
                           double kl_epsilon = kKlEpsilon) {
    if (target.probs.size() != config.num_positions()) {
        throw std::invalid_argument("evaluate: target length does not match position register");
    }
    const Eigen::VectorXd trained = run_multi_ssqw(config, params);
    LossReport report;
    report.mse = mse(target.probs, trained);
    report.kl = kl_divergence(target.probs, trained, kl_epsilon);
    report.combined = report.mse + kl_weight * report.kl;
    return report;
}

}  // namespace qwalk
