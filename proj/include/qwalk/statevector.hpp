// Dense complex statevector for a coin qubit plus a little-endian position
// register, with single-qubit, controlled and multi-controlled gate kernels.
//
// Qubit convention used throughout: qubit 0 is the coin (|up> = 0, |down> = 1),
// qubits 1..N form the position register with qubit 1 the least significant
// position bit. A basis index therefore decomposes as i = (x << 1) | coin.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace qwalk {

template <typename Scalar = double>
using Gate2x2 = Eigen::Matrix2<std::complex<Scalar>>;

template <typename Scalar = double>
using AmplitudeVector = Eigen::Vector<std::complex<Scalar>, Eigen::Dynamic>;

// A control condition: the given qubit must hold the given bit value.
struct ControlBit {
    int qubit = 0;
    int value = 1;
};

template <typename Scalar = double>
class StateVector {
  public:
    using Complex = std::complex<Scalar>;

    StateVector(int num_qubits, std::int64_t basis_index)
        : num_qubits_(num_qubits) {
        if (num_qubits < 1) {
            throw std::invalid_argument("StateVector: need at least one qubit");
        }
        const std::int64_t dim = std::int64_t{1} << num_qubits;
        if (basis_index < 0 || basis_index >= dim) {
            throw std::invalid_argument("StateVector: basis index out of range");
        }
        amplitudes_ = AmplitudeVector<Scalar>::Zero(dim);
        amplitudes_[basis_index] = Complex{1, 0};
    }

    int num_qubits() const { return num_qubits_; }
    std::int64_t dim() const { return amplitudes_.size(); }

    const AmplitudeVector<Scalar>& amplitudes() const { return amplitudes_; }
    AmplitudeVector<Scalar>& amplitudes() { return amplitudes_; }

    Complex amplitude(std::int64_t basis_index) const { return amplitudes_[basis_index]; }

    Scalar norm_error() const { return std::abs(amplitudes_.squaredNorm() - Scalar{1}); }

  private:
    int num_qubits_;
    AmplitudeVector<Scalar> amplitudes_;
};

template <typename Scalar>
StateVector<Scalar> new_state(int num_qubits, std::int64_t basis_index) {
    return StateVector<Scalar>(num_qubits, basis_index);
}

inline StateVector<double> new_state(int num_qubits, std::int64_t basis_index) {
    return StateVector<double>(num_qubits, basis_index);
}

template <typename Scalar>
bool is_unitary(const Gate2x2<Scalar>& g, Scalar tol = Scalar(1e-10)) {
    return (g.adjoint() * g - Gate2x2<Scalar>::Identity()).cwiseAbs().maxCoeff() <= tol;
}

namespace gates {

template <typename Scalar = double>
Gate2x2<Scalar> identity() {
    return Gate2x2<Scalar>::Identity();
}

template <typename Scalar = double>
Gate2x2<Scalar> pauli_x() {
    Gate2x2<Scalar> g;
    g << 0, 1, 1, 0;
    return g;
}

template <typename Scalar = double>
Gate2x2<Scalar> pauli_z() {
    Gate2x2<Scalar> g;
    g << 1, 0, 0, -1;
    return g;
}

template <typename Scalar = double>
Gate2x2<Scalar> hadamard() {
    const Scalar s = Scalar{1} / std::sqrt(Scalar{2});
    Gate2x2<Scalar> g;
    g << s, s, s, -s;
    return g;
}

}  // namespace gates

namespace detail {

template <typename Scalar>
void check_target(const StateVector<Scalar>& state, int target) {
    if (target < 0 || target >= state.num_qubits()) {
        throw std::invalid_argument("gate target qubit out of range");
    }
}

inline std::int64_t control_mask(std::span<const ControlBit> controls, std::int64_t& value_mask) {
    std::int64_t mask = 0;
    value_mask = 0;
    for (const auto& c : controls) {
        const std::int64_t bit = std::int64_t{1} << c.qubit;
        if (mask & bit) {
            throw std::invalid_argument("duplicate control qubit");
        }
        mask |= bit;
        if (c.value) value_mask |= bit;
    }
    return mask;
}

}  // namespace detail

// Applies a 2x2 gate to the target qubit. With validate set, rejects
// non-unitary gates up front instead of silently denormalizing the state.
template <typename Scalar>
void apply_1q(StateVector<Scalar>& state, const Gate2x2<Scalar>& gate, int target,
              bool validate = false) {
    detail::check_target(state, target);
    if (validate && !is_unitary(gate)) {
        throw std::invalid_argument("apply_1q: gate is not unitary");
    }
    auto& amps = state.amplitudes();
    const std::int64_t dim = amps.size();
    const std::int64_t tbit = std::int64_t{1} << target;
    for (std::int64_t i = 0; i < dim; ++i) {
        if (i & tbit) continue;
        const std::int64_t j = i | tbit;
        const auto a0 = amps[i];
        const auto a1 = amps[j];
        amps[i] = gate(0, 0) * a0 + gate(0, 1) * a1;
        amps[j] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
}

// Applies the gate to the target only on amplitude pairs whose control qubit
// holds control_value; all other amplitudes are untouched.
template <typename Scalar>
void apply_controlled_1q(StateVector<Scalar>& state, const Gate2x2<Scalar>& gate, int control,
                         int control_value, int target) {
    detail::check_target(state, target);
    detail::check_target(state, control);
    if (control == target) {
        throw std::invalid_argument("apply_controlled_1q: control equals target");
    }
    auto& amps = state.amplitudes();
    const std::int64_t dim = amps.size();
    const std::int64_t tbit = std::int64_t{1} << target;
    const std::int64_t cbit = std::int64_t{1} << control;
    const std::int64_t cval = control_value ? cbit : 0;
    for (std::int64_t i = 0; i < dim; ++i) {
        if (i & tbit) continue;
        if ((i & cbit) != cval) continue;
        const std::int64_t j = i | tbit;
        const auto a0 = amps[i];
        const auto a1 = amps[j];
        amps[i] = gate(0, 0) * a0 + gate(0, 1) * a1;
        amps[j] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
}

// Multi-controlled X: flips the target wherever every control bit matches its
// required value. Controls may demand either bit value (anti-controls).
template <typename Scalar>
void apply_mcx(StateVector<Scalar>& state, std::span<const ControlBit> controls, int target) {
    detail::check_target(state, target);
    for (const auto& c : controls) {
        detail::check_target(state, c.qubit);
        if (c.qubit == target) {
            throw std::invalid_argument("apply_mcx: control equals target");
        }
    }
    std::int64_t value_mask = 0;
    const std::int64_t mask = detail::control_mask(controls, value_mask);
    auto& amps = state.amplitudes();
    const std::int64_t dim = amps.size();
    const std::int64_t tbit = std::int64_t{1} << target;
    for (std::int64_t i = 0; i < dim; ++i) {
        if (i & tbit) continue;
        if ((i & mask) != value_mask) continue;
        std::swap(amps[i], amps[i | tbit]);
    }
}

template <typename Scalar>
void apply_mcx(StateVector<Scalar>& state, std::initializer_list<ControlBit> controls,
               int target) {
    apply_mcx(state, std::span<const ControlBit>(controls.begin(), controls.size()), target);
}

// Probability marginal over an ordered subset of qubits. Entry j collects
// |amplitude|^2 over all basis states whose k-th selected qubit equals bit k
// of j.
template <typename Scalar>
Eigen::VectorXd marginal_probs(const StateVector<Scalar>& state, std::span<const int> qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("marginal_probs: empty qubit subset");
    }
    std::int64_t seen = 0;
    for (int q : qubits) {
        if (q < 0 || q >= state.num_qubits()) {
            throw std::invalid_argument("marginal_probs: qubit index out of range");
        }
        if (seen & (std::int64_t{1} << q)) {
            throw std::invalid_argument("marginal_probs: duplicate qubit index");
        }
        seen |= std::int64_t{1} << q;
    }
    Eigen::VectorXd out = Eigen::VectorXd::Zero(std::int64_t{1} << qubits.size());
    const auto& amps = state.amplitudes();
    for (std::int64_t i = 0; i < amps.size(); ++i) {
        std::int64_t j = 0;
        for (std::size_t k = 0; k < qubits.size(); ++k) {
            if (i & (std::int64_t{1} << qubits[k])) j |= std::int64_t{1} << k;
        }
        out[j] += std::norm(amps[i]);
    }
    return out;
}

template <typename Scalar>
Eigen::VectorXd marginal_probs(const StateVector<Scalar>& state,
                               std::initializer_list<int> qubits) {
    return marginal_probs(state, std::span<const int>(qubits.begin(), qubits.size()));
}

// Marginal over the position register (qubits 1..N), length 2^N.
template <typename Scalar>
Eigen::VectorXd position_probs(const StateVector<Scalar>& state) {
    std::vector<int> qubits(static_cast<std::size_t>(state.num_qubits() - 1));
    for (std::size_t k = 0; k < qubits.size(); ++k) qubits[k] = static_cast<int>(k) + 1;
    return marginal_probs(state, std::span<const int>(qubits));
}

// Draws shot samples from the marginal distribution of the given qubits using
// a caller-seeded generator; exact amplitudes remain the default measurement
// model, this exists for shot-noise realism studies. The sampling path avoids
// std::discrete_distribution so results are identical across standard
// library implementations.
template <typename Scalar, typename Rng>
std::vector<std::int64_t> sample_counts(const StateVector<Scalar>& state,
                                        std::span<const int> qubits, std::int64_t shots,
                                        Rng& rng) {
    if (shots < 0) {
        throw std::invalid_argument("sample_counts: negative shot count");
    }
    const Eigen::VectorXd probs = marginal_probs(state, qubits);
    Eigen::VectorXd cdf(probs.size());
    double acc = 0.0;
    for (Eigen::Index i = 0; i < probs.size(); ++i) {
        acc += probs[i];
        cdf[i] = acc;
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(probs.size()), 0);
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        Eigen::Index lo = 0, hi = cdf.size() - 1;
        while (lo < hi) {
            const Eigen::Index mid = (lo + hi) / 2;
            if (cdf[mid] <= u) {
                lo = mid + 1;
            } else {
                hi = mid;
            }
        }
        ++counts[static_cast<std::size_t>(lo)];
    }
    return counts;
}

}  // namespace qwalk
