// Copyright 2026 The bellsim Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file state_vector.hpp
 * Dense pure-state vectors over n qubits.
 *
 * Qubit k of an n-qubit register occupies bit (n - 1 - k) of the basis
 * index, so the ket |b0 b1 ... b(n-1)> reads left to right as qubits
 * 0 ... n-1 and |01> on two qubits is basis index 1.
 *
 * Every free function here takes its inputs by const reference and returns
 * a new state; a BasicStateVector is never mutated after construction.
 */
#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <utility>

#include "bellsim/errors.hpp"
#include "bellsim/gates.hpp"
#include "bellsim/rng.hpp"
#include "bellsim/tolerance.hpp"

namespace bellsim {

inline constexpr int kMaxQubits = 24;

template <typename Real> class BasicStateVector {
  public:
    using RealScalar = Real;
    using Scalar = std::complex<Real>;
    using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Index = Eigen::Index;

    /// Wraps `amps`, which must have power-of-two length 2^n with
    /// 1 <= n <= kMaxQubits, finite entries and unit norm.
    static BasicStateVector from_amplitudes(Amplitudes amps) {
        const int n = qubits_for_length(amps.size());
        if (!amps.allFinite()) {
            throw ArgumentError("state amplitudes must be finite");
        }
        const Real norm2 = amps.squaredNorm();
        if (std::abs(norm2 - Real(1)) > Real(tolerance::kNormalization)) {
            throw ArgumentError("state amplitudes are not normalized (norm^2 = " +
                                std::to_string(static_cast<double>(norm2)) + ")");
        }
        return BasicStateVector(n, std::move(amps));
    }

    /// Like from_amplitudes but rescales to unit norm first. Zero vectors
    /// are rejected.
    static BasicStateVector normalized(Amplitudes amps) {
        const int n = qubits_for_length(amps.size());
        if (!amps.allFinite()) {
            throw ArgumentError("state amplitudes must be finite");
        }
        const Real norm = amps.norm();
        if (!(norm > Real(0))) {
            throw ArgumentError("cannot normalize the zero vector");
        }
        amps /= norm;
        return BasicStateVector(n, std::move(amps));
    }

    int num_qubits() const noexcept { return num_qubits_; }
    Index dimension() const noexcept { return amps_.size(); }
    const Amplitudes &amplitudes() const noexcept { return amps_; }
    Scalar operator[](Index i) const { return amps_(i); }

    /// Bit mask of qubit `q` inside a basis index.
    Index mask(int q) const noexcept { return Index{1} << (num_qubits_ - 1 - q); }

    void check_qubit(int q) const {
        if (q < 0 || q >= num_qubits_) {
            throw ArgumentError("qubit " + std::to_string(q) + " out of range for a " +
                                std::to_string(num_qubits_) + "-qubit state");
        }
    }

    /// Exact amplitude-wise equality; use fidelity_up_to_phase for physics.
    friend bool operator==(const BasicStateVector &a, const BasicStateVector &b) {
        return a.num_qubits_ == b.num_qubits_ && a.amps_ == b.amps_;
    }

  private:
    BasicStateVector(int n, Amplitudes amps) : num_qubits_(n), amps_(std::move(amps)) {}

    static int qubits_for_length(Index len) {
        if (len < 2 || (len & (len - 1)) != 0) {
            throw ArgumentError("amplitude count " + std::to_string(len) +
                                " is not a power of two >= 2");
        }
        int n = 0;
        while ((Index{1} << n) < len) {
            ++n;
        }
        if (n > kMaxQubits) {
            throw CapacityError("state of " + std::to_string(n) + " qubits exceeds the " +
                                std::to_string(kMaxQubits) + "-qubit cap");
        }
        return n;
    }

    template <typename R> friend class StateBuilder;

    int num_qubits_;
    Amplitudes amps_;
};

using StateVector = BasicStateVector<double>;

/// Unchecked construction for kernels that preserve normalization by
/// construction. Not part of the public surface.
template <typename Real> class StateBuilder {
  public:
    using State = BasicStateVector<Real>;
    static State adopt(int n, typename State::Amplitudes amps) { return State(n, std::move(amps)); }
};

inline void check_capacity(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("qubit count " + std::to_string(num_qubits) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
    }
}

template <typename Real = double>
BasicStateVector<Real> basis_state(int num_qubits, std::span<const int> bits) {
    check_capacity(num_qubits);
    if (static_cast<int>(bits.size()) != num_qubits) {
        throw ArgumentError("expected " + std::to_string(num_qubits) + " bits, got " +
                            std::to_string(bits.size()));
    }
    Eigen::Index index = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw ArgumentError("basis bits must be 0 or 1");
        }
        index = (index << 1) | b;
    }
    typename BasicStateVector<Real>::Amplitudes amps =
        BasicStateVector<Real>::Amplitudes::Zero(Eigen::Index{1} << num_qubits);
    amps(index) = Real(1);
    return StateBuilder<Real>::adopt(num_qubits, std::move(amps));
}

template <typename Real = double>
BasicStateVector<Real> basis_state(int num_qubits, std::initializer_list<int> bits) {
    return basis_state<Real>(num_qubits, std::span<const int>(bits.begin(), bits.size()));
}

/// |0...0> on `num_qubits` qubits.
template <typename Real = double> BasicStateVector<Real> zero_state(int num_qubits) {
    check_capacity(num_qubits);
    typename BasicStateVector<Real>::Amplitudes amps =
        BasicStateVector<Real>::Amplitudes::Zero(Eigen::Index{1} << num_qubits);
    amps(0) = Real(1);
    return StateBuilder<Real>::adopt(num_qubits, std::move(amps));
}

/// a (x) b, with a's qubits first.
template <typename Real>
BasicStateVector<Real> tensor(const BasicStateVector<Real> &a, const BasicStateVector<Real> &b) {
    const int n = a.num_qubits() + b.num_qubits();
    if (n > kMaxQubits) {
        throw CapacityError("tensor product of " + std::to_string(n) + " qubits exceeds the " +
                            std::to_string(kMaxQubits) + "-qubit cap");
    }
    typename BasicStateVector<Real>::Amplitudes amps(a.dimension() * b.dimension());
    for (Eigen::Index i = 0; i < a.dimension(); ++i) {
        amps.segment(i * b.dimension(), b.dimension()) = a[i] * b.amplitudes();
    }
    return StateBuilder<Real>::adopt(n, std::move(amps));
}

/// Multiplies every amplitude by `phase`, which must have unit modulus.
template <typename Real>
BasicStateVector<Real> with_global_phase(const BasicStateVector<Real> &state,
                                         std::complex<Real> phase) {
    if (std::abs(std::abs(phase) - Real(1)) > Real(tolerance::kOperation)) {
        throw ArgumentError("global phase must have unit modulus");
    }
    return StateBuilder<Real>::adopt(state.num_qubits(), state.amplitudes() * phase);
}

template <typename Real>
BasicStateVector<Real> apply_single(const BasicStateVector<Real> &state, const BasicGate<Real> &gate,
                                    int qubit) {
    state.check_qubit(qubit);
    const auto &m = gate.matrix();
    const Eigen::Index stride = state.mask(qubit);
    typename BasicStateVector<Real>::Amplitudes out = state.amplitudes();
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        if (i & stride) {
            continue;
        }
        const auto a0 = out(i);
        const auto a1 = out(i | stride);
        out(i) = m(0, 0) * a0 + m(0, 1) * a1;
        out(i | stride) = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return StateBuilder<Real>::adopt(state.num_qubits(), std::move(out));
}

/// Applies `gate` to `target` on the subspace where `control` reads 1.
template <typename Real>
BasicStateVector<Real> apply_controlled(const BasicStateVector<Real> &state,
                                        const BasicGate<Real> &gate, int control, int target) {
    state.check_qubit(control);
    state.check_qubit(target);
    if (control == target) {
        throw ArgumentError("control and target must differ (both are " +
                            std::to_string(control) + ")");
    }
    const auto &m = gate.matrix();
    const Eigen::Index cmask = state.mask(control);
    const Eigen::Index stride = state.mask(target);
    typename BasicStateVector<Real>::Amplitudes out = state.amplitudes();
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        if ((i & stride) || !(i & cmask)) {
            continue;
        }
        const auto a0 = out(i);
        const auto a1 = out(i | stride);
        out(i) = m(0, 0) * a0 + m(0, 1) * a1;
        out(i | stride) = m(1, 0) * a0 + m(1, 1) * a1;
    }
    return StateBuilder<Real>::adopt(state.num_qubits(), std::move(out));
}

/// <a|b>. Dimensions must agree.
template <typename Real>
std::complex<Real> inner_product(const BasicStateVector<Real> &a, const BasicStateVector<Real> &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ArgumentError("inner product of states with " + std::to_string(a.num_qubits()) +
                            " and " + std::to_string(b.num_qubits()) + " qubits");
    }
    return a.amplitudes().dot(b.amplitudes());
}

/// |<a|b>|^2; 1 exactly when a and b agree up to a global phase.
template <typename Real>
Real fidelity_up_to_phase(const BasicStateVector<Real> &a, const BasicStateVector<Real> &b) {
    return std::norm(inner_product(a, b));
}

/// (P(qubit = 0), P(qubit = 1)).
template <typename Real>
std::pair<Real, Real> outcome_probs(const BasicStateVector<Real> &state, int qubit) {
    state.check_qubit(qubit);
    const Eigen::Index m = state.mask(qubit);
    Real p0 = 0;
    Real p1 = 0;
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        (i & m ? p1 : p0) += std::norm(state[i]);
    }
    return {p0, p1};
}

template <typename Real> struct Projection {
    Real probability;
    BasicStateVector<Real> collapsed;
};

/// Projects `qubit` onto `bit` and renormalizes. The register keeps its
/// width; the measured qubit is left in the definite state |bit>.
template <typename Real>
Projection<Real> project_qubit(const BasicStateVector<Real> &state, int qubit, int bit) {
    state.check_qubit(qubit);
    if (bit != 0 && bit != 1) {
        throw ArgumentError("measurement outcome must be 0 or 1");
    }
    const auto [p0, p1] = outcome_probs(state, qubit);
    const Real prob = bit ? p1 : p0;
    if (prob < Real(tolerance::kImpossibleOutcome)) {
        throw ImpossibleOutcomeError("outcome " + std::to_string(bit) + " on qubit " +
                                     std::to_string(qubit) + " has probability " +
                                     std::to_string(static_cast<double>(prob)));
    }
    const Eigen::Index m = state.mask(qubit);
    const Eigen::Index keep = bit ? m : 0;
    const Real scale = Real(1) / std::sqrt(prob);
    typename BasicStateVector<Real>::Amplitudes out(state.dimension());
    for (Eigen::Index i = 0; i < state.dimension(); ++i) {
        out(i) = (i & m) == keep ? state[i] * scale : std::complex<Real>(0);
    }
    return {prob, StateBuilder<Real>::adopt(state.num_qubits(), std::move(out))};
}

template <typename Real> struct Measurement {
    int bit;
    BasicStateVector<Real> collapsed;
};

/// Samples one computational-basis measurement of `qubit` from `rng`.
template <typename Real, typename URBG>
Measurement<Real> measure_qubit(const BasicStateVector<Real> &state, int qubit, URBG &rng) {
    const auto [p0, p1] = outcome_probs(state, qubit);
    int bit = uniform_unit(rng) < static_cast<double>(p0) ? 0 : 1;
    // Rounding can leave a residual sliver on an outcome that cannot be
    // projected onto; pick the other one.
    if ((bit ? p1 : p0) < Real(tolerance::kImpossibleOutcome)) {
        bit ^= 1;
    }
    return {bit, project_qubit(state, qubit, bit).collapsed};
}

/// Removes `qubit` from the register. The qubit must already be in a
/// definite computational-basis state (e.g. right after project_qubit).
template <typename Real>
BasicStateVector<Real> drop_qubit(const BasicStateVector<Real> &state, int qubit) {
    state.check_qubit(qubit);
    if (state.num_qubits() == 1) {
        throw ArgumentError("cannot drop the only qubit of a register");
    }
    const auto [p0, p1] = outcome_probs(state, qubit);
    int bit = 0;
    if (p1 < Real(tolerance::kImpossibleOutcome)) {
        bit = 0;
    } else if (p0 < Real(tolerance::kImpossibleOutcome)) {
        bit = 1;
    } else {
        throw ArgumentError("qubit " + std::to_string(qubit) +
                            " is not in a definite basis state and cannot be dropped");
    }
    const int n = state.num_qubits();
    const int low_bits = n - 1 - qubit;
    const Eigen::Index low_mask = (Eigen::Index{1} << low_bits) - 1;
    typename BasicStateVector<Real>::Amplitudes out(state.dimension() / 2);
    for (Eigen::Index j = 0; j < out.size(); ++j) {
        const Eigen::Index high = (j & ~low_mask) << 1;
        const Eigen::Index i = high | (Eigen::Index{bit} << low_bits) | (j & low_mask);
        out(j) = state[i];
    }
    return StateBuilder<Real>::adopt(n - 1, std::move(out));
}

/// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
template <typename Real = double, typename URBG>
BasicStateVector<Real> random_state(int num_qubits, URBG &rng) {
    check_capacity(num_qubits);
    std::normal_distribution<Real> gauss;
    typename BasicStateVector<Real>::Amplitudes amps(Eigen::Index{1} << num_qubits);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
        const Real re = gauss(rng);
        const Real im = gauss(rng);
        amps(i) = {re, im};
    }
    return BasicStateVector<Real>::normalized(std::move(amps));
}

} // namespace bellsim
