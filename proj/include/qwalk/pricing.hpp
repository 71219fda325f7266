// European call payoff expectation over a discrete price distribution, and
// the analytic Black-Scholes value used to cross-check it.

#pragma once

#include <qwalk/targets.hpp>

#include <cmath>

namespace qwalk {

inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

// Sum of probs_i * max(label_i - strike, 0); labels must be price levels.
// The expectation is undiscounted unless the discount flag is set.
inline double call_payoff_expectation(const TargetDistribution& dist, double strike,
                                      bool discount = false, double rate = 0.0,
                                      double maturity_days = 0.0) {
    dist.validate();
    if (!(strike > 0.0)) throw std::invalid_argument("call_payoff_expectation: strike must be > 0");
    if (dist.bin_labels.minCoeff() < 0.0) {
        throw std::invalid_argument("call_payoff_expectation: labels are not price levels");
    }
    double acc = 0.0;
    for (Eigen::Index i = 0; i < dist.probs.size(); ++i) {
        acc += dist.probs[i] * std::max(dist.bin_labels[i] - strike, 0.0);
    }
    if (discount) {
        if (!(maturity_days > 0.0)) {
            throw std::invalid_argument("call_payoff_expectation: discounting needs maturity > 0");
        }
        acc *= std::exp(-rate * maturity_days / 365.0);
    }
    return acc;
}

// Discounted Black-Scholes call price; the vol -> 0 limit is the
// deterministic forward value max(spot - strike e^{-r tau}, 0).
inline double black_scholes_call(const PricingParams& pp) {
    pp.validate();
    const double tau = pp.year_fraction();
    if (pp.volatility == 0.0) {
        return std::max(pp.spot - pp.strike * std::exp(-pp.rate * tau), 0.0);
    }
    const double sig_sqrt_tau = pp.volatility * std::sqrt(tau);
    const double d1 =
        (std::log(pp.spot / pp.strike) + (pp.rate + 0.5 * pp.volatility * pp.volatility) * tau) /
        sig_sqrt_tau;
    const double d2 = d1 - sig_sqrt_tau;
    return pp.spot * normal_cdf(d1) - pp.strike * std::exp(-pp.rate * tau) * normal_cdf(d2);
}

}  // namespace qwalk
