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
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "bellsim/bell.hpp"
#include "oracles.hpp"

using namespace bellsim;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Local operators as dense 4x4 matrices, qubit 0 = channel qubit 1.
oracle::Mat dense_op(LocalOp op) {
    using namespace oracle;
    switch (op) {
    case LocalOp::X1:
        return single(2, pauli_x(), 0);
    case LocalOp::X2:
        return single(2, pauli_x(), 1);
    case LocalOp::Y1:
        return single(2, pauli_y(), 0);
    case LocalOp::Y2:
        return single(2, pauli_y(), 1);
    case LocalOp::Z1:
        return single(2, pauli_z(), 0);
    case LocalOp::Z2:
        return single(2, pauli_z(), 1);
    case LocalOp::HH:
        return kron_all({hadamard(), hadamard()});
    }
    return {};
}

// Brute-force label: the Bell vector (written out from its kets) with
// overlap modulus 1.
std::optional<BellLabel> brute_force_label(const oracle::Vec &v) {
    using oracle::ket;
    const std::array<std::pair<BellLabel, oracle::Vec>, 4> basis{{
        {BellLabel::PsiPlus, (ket({0, 0}) + ket({1, 1})) * kInvSqrt2},
        {BellLabel::PsiMinus, (ket({0, 0}) - ket({1, 1})) * kInvSqrt2},
        {BellLabel::PhiPlus, (ket({0, 1}) + ket({1, 0})) * kInvSqrt2},
        {BellLabel::PhiMinus, (ket({0, 1}) - ket({1, 0})) * kInvSqrt2},
    }};
    for (const auto &[label, b] : basis) {
        if (std::abs(std::abs(b.dot(v)) - 1.0) < 1e-12) {
            return label;
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("bell_state amplitudes") {
    const auto psi_p = bell_state(BellLabel::PsiPlus);
    CHECK(psi_p[0] == std::complex<double>(kInvSqrt2));
    CHECK(psi_p[1] == std::complex<double>(0));
    CHECK(psi_p[2] == std::complex<double>(0));
    CHECK(psi_p[3] == std::complex<double>(kInvSqrt2));

    const auto phi_m = bell_state(BellLabel::PhiMinus);
    CHECK(phi_m[0] == std::complex<double>(0));
    CHECK(phi_m[1] == std::complex<double>(kInvSqrt2));
    CHECK(phi_m[2] == std::complex<double>(-kInvSqrt2));
    CHECK(phi_m[3] == std::complex<double>(0));
}

TEST_CASE("Bell basis is orthonormal") {
    Eigen::Matrix4cd gram;
    for (BellLabel a : kAllBellLabels) {
        for (BellLabel b : kAllBellLabels) {
            gram(static_cast<int>(index_of(a)), static_cast<int>(index_of(b))) =
                inner_product(bell_state(a), bell_state(b));
        }
    }
    CHECK((gram - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("classify_bell") {
    CHECK(classify_bell(bell_state(BellLabel::PsiPlus)) == BellLabel::PsiPlus);
    CHECK_FALSE(classify_bell(zero_state(2)).has_value());
    const auto rotated = with_global_phase(bell_state(BellLabel::PhiMinus), {0.0, 1.0});
    CHECK(classify_bell(rotated) == BellLabel::PhiMinus);
    CHECK_THROWS_AS(classify_bell(zero_state(3)), ArgumentError);
    // |00> has fidelity 1/2 with psi+ and psi-; a loose tolerance admits
    // the first of them in label order.
    CHECK(classify_bell(zero_state(2), 0.51) == BellLabel::PsiPlus);
    CHECK_FALSE(classify_bell(zero_state(2), 0.49).has_value());
}

TEST_CASE("label and op names round trip") {
    for (BellLabel l : kAllBellLabels) {
        CHECK(parse_bell_label(to_string(l)) == l);
    }
    for (LocalOp op : kAllLocalOps) {
        CHECK(parse_local_op(to_string(op)) == op);
    }
    CHECK_FALSE(parse_bell_label("Psi+"));
    CHECK_FALSE(parse_local_op("h1"));
}

TEST_CASE("transform_label examples") {
    CHECK(transform_label(LocalOp::Z1, BellLabel::PsiPlus) == BellLabel::PsiMinus);
    CHECK(transform_label(LocalOp::X1, BellLabel::PsiPlus) == BellLabel::PhiPlus);
    CHECK(transform_label(LocalOp::HH, BellLabel::PsiMinus) == BellLabel::PhiPlus);
}

TEST_CASE("transform table matches classify_bell over every (op, label)") {
    for (LocalOp op : kAllLocalOps) {
        for (BellLabel l : kAllBellLabels) {
            CAPTURE(to_string(op));
            CAPTURE(to_string(l));
            const auto via_sim = classify_bell(apply_local_op(bell_state(l), op));
            REQUIRE(via_sim.has_value());
            CHECK(*via_sim == transform_label(op, l));
        }
    }
}

TEST_CASE("transform table matches dense 4x4 operators") {
    for (LocalOp op : kAllLocalOps) {
        for (BellLabel l : kAllBellLabels) {
            const oracle::Vec out = dense_op(op) * bell_state(l).amplitudes();
            CHECK(brute_force_label(out) == transform_label(op, l));
        }
    }
}

TEST_CASE("every local op permutes the labels") {
    for (LocalOp op : kAllLocalOps) {
        std::set<BellLabel> image;
        for (BellLabel l : kAllBellLabels) {
            image.insert(transform_label(op, l));
        }
        CHECK(image.size() == 4);
    }
}

TEST_CASE("HH is an involution on labels") {
    for (BellLabel l : kAllBellLabels) {
        CHECK(transform_label(LocalOp::HH, transform_label(LocalOp::HH, l)) == l);
    }
}

TEST_CASE("apply_local_op needs a 2-qubit channel") {
    CHECK_THROWS_AS(apply_local_op(zero_state(3), LocalOp::X1), ArgumentError);
}
