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
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "bellsim/errors.hpp"
#include "bellsim/tolerance.hpp"

namespace bellsim {

enum class GateName { I, X, Y, Z, H };

inline constexpr std::array<GateName, 5> kAllGateNames{GateName::I, GateName::X, GateName::Y,
                                                       GateName::Z, GateName::H};

/// Lowercase mnemonic, as used by the circuit text format.
constexpr std::string_view mnemonic(GateName name) {
    switch (name) {
    case GateName::I:
        return "i";
    case GateName::X:
        return "x";
    case GateName::Y:
        return "y";
    case GateName::Z:
        return "z";
    case GateName::H:
        return "h";
    }
    return "?";
}

constexpr std::optional<GateName> gate_from_mnemonic(std::string_view text) {
    for (GateName g : kAllGateNames) {
        if (mnemonic(g) == text) {
            return g;
        }
    }
    return std::nullopt;
}

/// A 2x2 unitary. Unitarity is checked on construction.
template <typename Real> class BasicGate {
  public:
    using Scalar = std::complex<Real>;
    using Matrix = Eigen::Matrix<Scalar, 2, 2>;

    explicit BasicGate(const Matrix &m) : m_(m) {
        if (!m_.allFinite()) {
            throw ArgumentError("gate matrix must be finite");
        }
        const Matrix defect = m_ * m_.adjoint() - Matrix::Identity();
        if (defect.cwiseAbs().maxCoeff() > unitarity_tolerance()) {
            throw ArgumentError("gate matrix is not unitary");
        }
    }

    const Matrix &matrix() const noexcept { return m_; }

    /// 1e-12 in double; a few ulps for narrower scalars.
    static constexpr Real unitarity_tolerance() {
        return std::max(Real(tolerance::kOperation), 16 * std::numeric_limits<Real>::epsilon());
    }

    /// Matrix product, applied right to left: (a * b)|s> == a(b|s>).
    friend BasicGate operator*(const BasicGate &a, const BasicGate &b) {
        return BasicGate(a.m_ * b.m_);
    }

  private:
    Matrix m_;
};

using Gate = BasicGate<double>;

template <typename Real = double> BasicGate<Real> standard_gate(GateName name) {
    using M = typename BasicGate<Real>::Matrix;
    using C = std::complex<Real>;
    M m;
    switch (name) {
    case GateName::I:
        m = M::Identity();
        break;
    case GateName::X:
        m << C(0), C(1), C(1), C(0);
        break;
    case GateName::Y:
        m << C(0), C(0, -1), C(0, 1), C(0);
        break;
    case GateName::Z:
        m << C(1), C(0), C(0), C(-1);
        break;
    case GateName::H: {
        const Real s = Real(1) / std::sqrt(Real(2));
        m << C(s), C(s), C(s), C(-s);
        break;
    }
    default:
        throw ArgumentError("unknown gate");
    }
    return BasicGate<Real>(m);
}

/// Catalog lookup by mnemonic ("i", "x", "y", "z", "h").
template <typename Real = double> BasicGate<Real> standard_gate(std::string_view name) {
    const auto g = gate_from_mnemonic(name);
    if (!g) {
        throw ArgumentError("unknown gate '" + std::string(name) + "'");
    }
    return standard_gate<Real>(*g);
}

} // namespace bellsim
