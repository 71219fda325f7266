// Target distribution builders: return histograms, binomial PMFs, and
// discretized log-normal price grids.

#pragma once

#include <qwalk/objective.hpp>

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>

namespace qwalk {

// European option inputs. maturity_days is calendar days; the year fraction
// used everywhere is maturity_days / 365.
struct PricingParams {
    double spot = 0.0;
    double strike = 0.0;
    double rate = 0.0;
    double volatility = 0.0;
    double maturity_days = 0.0;

    double year_fraction() const { return maturity_days / 365.0; }

    void validate() const {
        if (!(spot > 0.0)) throw std::invalid_argument("pricing: spot must be > 0");
        if (!(strike > 0.0)) throw std::invalid_argument("pricing: strike must be > 0");
        if (!(volatility >= 0.0)) throw std::invalid_argument("pricing: volatility must be >= 0");
        if (!(maturity_days > 0.0)) throw std::invalid_argument("pricing: maturity must be > 0");
    }
};

// Equal-width histogram over [min, max] of the samples, right-inclusive last
// bin, labels at bin centers. A degenerate range is widened by +/-0.5 so a
// constant series still lands in one well-defined bin.
inline TargetDistribution histogram_from_returns(std::span<const double> returns_pct,
                                                 int num_bins = 16) {
    if (returns_pct.size() < 2) {
        throw std::invalid_argument("histogram_from_returns: need at least 2 samples");
    }
    if (num_bins < 1) throw std::invalid_argument("histogram_from_returns: num_bins must be >= 1");
    double lo = returns_pct[0], hi = returns_pct[0];
    for (double r : returns_pct) {
        if (!std::isfinite(r)) {
            throw std::invalid_argument("histogram_from_returns: non-finite sample");
        }
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    if (hi <= lo) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / num_bins;
    TargetDistribution dist;
    dist.name = "returns-histogram";
    dist.probs = Eigen::VectorXd::Zero(num_bins);
    dist.bin_labels.resize(num_bins);
    for (int b = 0; b < num_bins; ++b) dist.bin_labels[b] = lo + (b + 0.5) * width;
    for (double r : returns_pct) {
        auto b = static_cast<Eigen::Index>(std::floor((r - lo) / width));
        b = std::clamp<Eigen::Index>(b, 0, num_bins - 1);
        dist.probs[b] += 1.0;
    }
    dist.probs /= static_cast<double>(returns_pct.size());
    dist.validate();
    return dist;
}

// Binomial PMF over k = 0..n, zero-padded to 2^N bins, labels = k. Evaluated
// with the multiplicative recurrence so large n stays stable.
inline TargetDistribution binomial_target(int n, double p, int position_qubits) {
    if (n < 1) throw std::invalid_argument("binomial_target: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binomial_target: p must be in [0,1]");
    if (position_qubits < 1) {
        throw std::invalid_argument("binomial_target: position_qubits must be >= 1");
    }
    const std::int64_t bins = std::int64_t{1} << position_qubits;
    if (n + 1 > bins) {
        throw std::invalid_argument("binomial_target: n+1 exceeds 2^position_qubits bins");
    }
    TargetDistribution dist;
    dist.name = "binomial";
    dist.probs = Eigen::VectorXd::Zero(bins);
    dist.bin_labels.resize(bins);
    for (std::int64_t k = 0; k < bins; ++k) dist.bin_labels[k] = static_cast<double>(k);
    if (p == 0.0) {
        dist.probs[0] = 1.0;
    } else if (p == 1.0) {
        dist.probs[n] = 1.0;
    } else {
        // pmf(0) computed in log space, then pmf(k+1)/pmf(k) = (n-k)/(k+1) * p/(1-p).
        double v = std::exp(static_cast<double>(n) * std::log1p(-p));
        const double odds = p / (1.0 - p);
        for (int k = 0; k <= n; ++k) {
            dist.probs[k] = v;
            v *= odds * static_cast<double>(n - k) / static_cast<double>(k + 1);
        }
        dist.probs /= dist.probs.sum();
    }
    dist.validate();
    return dist;
}

// Log-normal terminal-price law discretized on an equally spaced price grid
// spanning truncation_sigmas standard deviations around the mean, density
// sampled pointwise and renormalized. ln S_T ~ Normal(mu, sigma^2) with
// mu = ln(spot) + (rate - vol^2/2) tau and sigma = vol sqrt(tau).
inline TargetDistribution lognormal_target(const PricingParams& pp, int position_qubits,
                                           double truncation_sigmas = 3.0) {
    pp.validate();
    if (!(pp.volatility > 0.0)) {
        throw std::invalid_argument("lognormal_target: volatility must be > 0");
    }
    if (position_qubits < 1) {
        throw std::invalid_argument("lognormal_target: position_qubits must be >= 1");
    }
    if (!(truncation_sigmas > 0.0)) {
        throw std::invalid_argument("lognormal_target: truncation_sigmas must be > 0");
    }
    const double tau = pp.year_fraction();
    const double mu = std::log(pp.spot) + (pp.rate - 0.5 * pp.volatility * pp.volatility) * tau;
    const double sigma = pp.volatility * std::sqrt(tau);
    const double mean = std::exp(mu + 0.5 * sigma * sigma);
    const double sd = mean * std::sqrt(std::expm1(sigma * sigma));
    const double lo = std::max(0.0, mean - truncation_sigmas * sd);
    const double hi = mean + truncation_sigmas * sd;
    const std::int64_t bins = std::int64_t{1} << position_qubits;
    TargetDistribution dist;
    dist.name = "lognormal";
    dist.probs.resize(bins);
    dist.bin_labels.resize(bins);
    for (std::int64_t i = 0; i < bins; ++i) {
        const double s = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins - 1);
        dist.bin_labels[i] = s;
        if (s <= 0.0) {
            dist.probs[i] = 0.0;
        } else {
            const double z = (std::log(s) - mu) / sigma;
            dist.probs[i] = std::exp(-0.5 * z * z) / s;
        }
    }
    dist.probs /= dist.probs.sum();
    dist.validate();
    return dist;
}

}  // namespace qwalk
