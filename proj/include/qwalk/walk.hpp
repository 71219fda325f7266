// Discrete-time and split-step quantum walk circuits over the coin+position
// statevector, and the multi-walker circuit whose coin angles get fitted.
//
// One split step is W = S- C2 S+ C1 (rightmost factor acts first): coin C1,
// conditional increment, coin C2, conditional decrement. The position space is
// cyclic: the increment/decrement cascades are modular adders by +/-1 on 2^N
// indices.

#pragma once

#include <qwalk/statevector.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qwalk {

// The three Euler angles of the universal 2x2 coin.
struct CoinParams {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
};

// One walker: the optimism/pessimism coin pair of a split step.
struct WalkerParams {
    CoinParams coin1;
    CoinParams coin2;
};

struct MultiSSQWConfig {
    int position_qubits = 4;
    int num_walkers = 1;
    int steps = 1;
    std::int64_t initial_position = 0;
    // Preparation coin applied to |up>; used when deriving a default
    // parameter vector. During fitting the preparation angles come from the
    // parameter vector itself (they are trained).
    CoinParams initial_coin;

    std::int64_t num_positions() const { return std::int64_t{1} << position_qubits; }
    int param_count() const { return 3 + 6 * num_walkers; }

    void validate() const {
        if (position_qubits < 1) throw std::invalid_argument("config: position_qubits must be >= 1");
        if (num_walkers < 1) throw std::invalid_argument("config: num_walkers must be >= 1");
        if (steps < 1) throw std::invalid_argument("config: steps must be >= 1");
        if (initial_position < 0 || initial_position >= num_positions()) {
            throw std::invalid_argument("config: initial_position out of range");
        }
    }
};

// Wraps an angle into [0, 2*pi).
inline double wrap_angle(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, two_pi);
    if (r < 0.0) r += two_pi;
    return r;
}

// Universal coin operator
//   [[cos(t/2),            -e^{i l} sin(t/2)],
//    [e^{i p} sin(t/2),  e^{i(l+p)} cos(t/2)]].
template <typename Scalar = double>
Gate2x2<Scalar> coin_matrix(const CoinParams& p) {
    if (!std::isfinite(p.theta) || !std::isfinite(p.phi) || !std::isfinite(p.lambda)) {
        throw std::invalid_argument("coin_matrix: non-finite angle");
    }
    using C = std::complex<Scalar>;
    const Scalar t = static_cast<Scalar>(p.theta) / 2;
    const Scalar c = std::cos(t);
    const Scalar s = std::sin(t);
    const C el = std::polar<Scalar>(1, static_cast<Scalar>(p.lambda));
    const C ep = std::polar<Scalar>(1, static_cast<Scalar>(p.phi));
    Gate2x2<Scalar> g;
    g << C{c, 0}, -el * s, ep * s, el * ep * c;
    return g;
}

// Modular +1 on the position register, applied only where the coin equals
// coin_value. Realized as the controlled-incrementer cascade: the bit at
// position qubit k flips when all lower position bits are 1, most significant
// bit first so every carry condition reads the original bits.
template <typename Scalar>
void apply_increment(StateVector<Scalar>& state, int coin_value) {
    const int n_pos = state.num_qubits() - 1;
    if (n_pos < 1) {
        throw std::invalid_argument("apply_increment: state has no position register");
    }
    std::vector<ControlBit> controls;
    for (int k = n_pos; k >= 1; --k) {
        controls.clear();
        controls.push_back({0, coin_value});
        for (int j = 1; j < k; ++j) controls.push_back({j, 1});
        apply_mcx(state, std::span<const ControlBit>(controls), k);
    }
}

// Modular -1 on the coin == coin_value slice; borrow propagates where all
// lower position bits are 0.
template <typename Scalar>
void apply_decrement(StateVector<Scalar>& state, int coin_value) {
    const int n_pos = state.num_qubits() - 1;
    if (n_pos < 1) {
        throw std::invalid_argument("apply_decrement: state has no position register");
    }
    std::vector<ControlBit> controls;
    for (int k = n_pos; k >= 1; --k) {
        controls.clear();
        controls.push_back({0, coin_value});
        for (int j = 1; j < k; ++j) controls.push_back({j, 0});
        apply_mcx(state, std::span<const ControlBit>(controls), k);
    }
}

// One DTQW step: coin on the coin qubit, then the bidirectional shift
// (up moves right, down moves left, both modular).
template <typename Scalar>
void dtqw_step(StateVector<Scalar>& state, const Gate2x2<Scalar>& coin) {
    apply_1q(state, coin, 0);
    apply_increment(state, 0);
    apply_decrement(state, 1);
}

// One split step W = S- C2 S+ C1.
template <typename Scalar>
void ssqw_step(StateVector<Scalar>& state, const WalkerParams& w) {
    apply_1q(state, coin_matrix<Scalar>(w.coin1), 0);
    apply_increment(state, 0);
    apply_1q(state, coin_matrix<Scalar>(w.coin2), 0);
    apply_decrement(state, 1);
}

// Full multi-walker parameter set: the preparation coin plus one coin pair
// per walker. Packs to the flat layout
//   [init.theta, init.phi, init.lambda,
//    walker k: c1.theta, c1.phi, c1.lambda, c2.theta, c2.phi, c2.lambda, ...]
struct MultiSSQWParams {
    CoinParams initial_coin;
    std::vector<WalkerParams> walkers;
};

inline Eigen::VectorXd pack_params(const MultiSSQWParams& p) {
    Eigen::VectorXd v(3 + 6 * static_cast<Eigen::Index>(p.walkers.size()));
    v[0] = p.initial_coin.theta;
    v[1] = p.initial_coin.phi;
    v[2] = p.initial_coin.lambda;
    Eigen::Index i = 3;
    for (const auto& w : p.walkers) {
        v[i++] = w.coin1.theta;
        v[i++] = w.coin1.phi;
        v[i++] = w.coin1.lambda;
        v[i++] = w.coin2.theta;
        v[i++] = w.coin2.phi;
        v[i++] = w.coin2.lambda;
    }
    return v;
}

inline MultiSSQWParams unpack_params(const Eigen::VectorXd& v, int num_walkers) {
    if (v.size() != 3 + 6 * static_cast<Eigen::Index>(num_walkers)) {
        throw std::invalid_argument("unpack_params: parameter vector length mismatch");
    }
    MultiSSQWParams p;
    p.initial_coin = {v[0], v[1], v[2]};
    p.walkers.resize(static_cast<std::size_t>(num_walkers));
    Eigen::Index i = 3;
    for (auto& w : p.walkers) {
        w.coin1 = {v[i], v[i + 1], v[i + 2]};
        w.coin2 = {v[i + 3], v[i + 4], v[i + 5]};
        i += 6;
    }
    return p;
}

// Default parameter vector for a config: its preparation coin and all walker
// coins at zero.
inline Eigen::VectorXd initial_params(const MultiSSQWConfig& config) {
    MultiSSQWParams p;
    p.initial_coin = config.initial_coin;
    p.walkers.resize(static_cast<std::size_t>(config.num_walkers));
    return pack_params(p);
}

// Applies the multi-SSQW evolution in place: preparation coin once, then per
// step every walker in ascending index order (walker 1 innermost). The walker
// order is fixed and identical every step; it is part of the parameter-vector
// contract.
template <typename Scalar>
void apply_multi_ssqw(StateVector<Scalar>& state, const MultiSSQWParams& params, int steps) {
    apply_1q(state, coin_matrix<Scalar>(params.initial_coin), 0);
    for (int t = 0; t < steps; ++t) {
        for (const auto& w : params.walkers) {
            ssqw_step(state, w);
        }
    }
}

// Runs the full circuit from |up> x |initial_position| and returns the
// position marginal (length 2^N, sums to 1).
inline Eigen::VectorXd run_multi_ssqw(const MultiSSQWConfig& config,
                                      const MultiSSQWParams& params) {
    config.validate();
    if (static_cast<int>(params.walkers.size()) != config.num_walkers) {
        throw std::invalid_argument("run_multi_ssqw: walker count mismatch");
    }
    StateVector<double> state(config.position_qubits + 1, config.initial_position << 1);
    apply_multi_ssqw(state, params, config.steps);
    return position_probs(state);
}

inline Eigen::VectorXd run_multi_ssqw(const MultiSSQWConfig& config, const Eigen::VectorXd& flat) {
    return run_multi_ssqw(config, unpack_params(flat, config.num_walkers));
}

// Bins reachable from the initial position in num_walkers*steps unit moves
// (modular). Returns nullopt when the whole register is reachable.
inline std::optional<std::string> reachability_warning(const MultiSSQWConfig& config,
                                                       const Eigen::VectorXd& target_probs,
                                                       double support_eps = 1e-9) {
    const std::int64_t reach = static_cast<std::int64_t>(config.num_walkers) * config.steps;
    const std::int64_t n = config.num_positions();
    if (2 * reach + 1 >= n) return std::nullopt;
    double outside = 0.0;
    std::int64_t bins_outside = 0;
    for (Eigen::Index i = 0; i < target_probs.size(); ++i) {
        std::int64_t d = std::abs(static_cast<std::int64_t>(i) - config.initial_position);
        d = std::min(d, n - d);
        if (d > reach && target_probs[i] > support_eps) {
            outside += target_probs[i];
            ++bins_outside;
        }
    }
    if (bins_outside == 0) return std::nullopt;
    std::ostringstream msg;
    msg << "target has " << bins_outside << " support bin(s) holding probability " << outside
        << " outside the reachable window [start - " << reach << ", start + " << reach
        << "] (mod " << n << "); that mass cannot be fitted";
    return msg.str();
}

enum class DtqwCoin { z, x, h };
enum class DtqwInit { up, down, symmetric };

// Position distribution of a DTQW started at the register center, per the
// standard three-coin demonstration. Requires 2^N >= 2t+1 so the ballistic
// cone cannot wrap onto itself.
inline Eigen::VectorXd dtqw_distribution(DtqwCoin coin_choice, DtqwInit init, int steps,
                                         int position_qubits) {
    if (steps < 1) throw std::invalid_argument("dtqw_distribution: steps must be >= 1");
    if (position_qubits < 1) {
        throw std::invalid_argument("dtqw_distribution: position_qubits must be >= 1");
    }
    const std::int64_t n = std::int64_t{1} << position_qubits;
    if (n < 2 * static_cast<std::int64_t>(steps) + 1) {
        int min_n = 1;
        while ((std::int64_t{1} << min_n) < 2 * static_cast<std::int64_t>(steps) + 1) ++min_n;
        throw std::invalid_argument("dtqw_distribution: position register too small for " +
                                    std::to_string(steps) + " steps; need at least " +
                                    std::to_string(min_n) + " position qubits");
    }
    const std::int64_t center = n / 2;
    StateVector<double> state(position_qubits + 1, center << 1);
    const double pi = std::numbers::pi;
    switch (init) {
        case DtqwInit::up:
            break;
        case DtqwInit::down:
            apply_1q(state, gates::pauli_x<double>(), 0);
            break;
        case DtqwInit::symmetric:
            // First column (1, i)/sqrt(2): the balanced start of the
            // symmetric Hadamard-walk demonstration.
            apply_1q(state, coin_matrix<double>({pi / 2, pi / 2, pi / 2}), 0);
            break;
    }
    Gate2x2<double> coin;
    switch (coin_choice) {
        case DtqwCoin::z: coin = gates::pauli_z<double>(); break;
        case DtqwCoin::x: coin = gates::pauli_x<double>(); break;
        case DtqwCoin::h: coin = gates::hadamard<double>(); break;
    }
    for (int t = 0; t < steps; ++t) dtqw_step(state, coin);
    return position_probs(state);
}

}  // namespace qwalk
