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

#include <cmath>

#include "bellsim/gates.hpp"
#include "bellsim/state_vector.hpp"

using namespace bellsim;

namespace {

double max_dev(const Gate::Matrix &a, const Gate::Matrix &b) { return (a - b).cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("catalog matrices") {
    using C = std::complex<double>;
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(max_dev(standard_gate(GateName::I).matrix(), Gate::Matrix::Identity()) == 0.0);

    Gate::Matrix y;
    y << C(0), C(0, -1), C(0, 1), C(0);
    CHECK(max_dev(standard_gate(GateName::Y).matrix(), y) == 0.0);

    Gate::Matrix h;
    h << s, s, s, -s;
    CHECK(max_dev(standard_gate(GateName::H).matrix(), h) == 0.0);

    const auto plus = apply_single(zero_state(1), standard_gate(GateName::H), 0);
    CHECK(std::abs(plus[0] - s) < 1e-15);
    CHECK(std::abs(plus[1] - s) < 1e-15);
}

TEST_CASE("every catalog gate is unitary and an involution") {
    for (GateName g : kAllGateNames) {
        const Gate u = standard_gate(g);
        CHECK(max_dev(u.matrix() * u.matrix().adjoint(), Gate::Matrix::Identity()) < 1e-12);
        CHECK(max_dev((u * u).matrix(), Gate::Matrix::Identity()) < 1e-12);
    }
}

TEST_CASE("Z = H X H") {
    const Gate h = standard_gate(GateName::H);
    const Gate x = standard_gate(GateName::X);
    CHECK(max_dev((h * x * h).matrix(), standard_gate(GateName::Z).matrix()) < 1e-12);
}

TEST_CASE("mnemonic lookup") {
    for (GateName g : kAllGateNames) {
        CHECK(gate_from_mnemonic(mnemonic(g)) == g);
    }
    CHECK_FALSE(gate_from_mnemonic("cx"));
    CHECK_FALSE(gate_from_mnemonic("H"));
    CHECK_THROWS_AS(standard_gate("t"), ArgumentError);
    CHECK(max_dev(standard_gate("x").matrix(), standard_gate(GateName::X).matrix()) == 0.0);
}

TEST_CASE("non-unitary matrices are rejected") {
    Gate::Matrix m;
    m << 1, 1, 0, 1;
    CHECK_THROWS_AS(Gate{m}, ArgumentError);
    m << 1, 0, 0, 1.0 + 1e-9;
    CHECK_THROWS_AS(Gate{m}, ArgumentError);
}

TEST_CASE("gates templated on float") {
    const auto hf = standard_gate<float>(GateName::H);
    const auto s = apply_single(zero_state<float>(1), hf, 0);
    CHECK(std::abs(s[0] - std::complex<float>(std::sqrt(0.5f))) < 1e-6f);
}
