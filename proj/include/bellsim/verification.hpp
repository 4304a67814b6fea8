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

#include <cstdint>
#include <vector>

#include "bellsim/bell.hpp"
#include "bellsim/discriminator.hpp"

namespace bellsim {

namespace tolerance {
inline constexpr double kTableProbability = 1e-12;
inline constexpr double kTableFidelity = 1e-12;
inline constexpr double kDistribution = 1e-10;
inline constexpr double kConditionalFidelity = 1e-9;
inline constexpr double kStabilizer = 1e-10;
inline constexpr double kIdempotence = 1e-12;
inline constexpr double kMonolithic = 1e-12;
} // namespace tolerance

struct TableRow {
    BellLabel label;
    int a1;
    int a2;
    double probability;
    /// Fidelity between the post-discrimination channel and the input.
    double fidelity;
    bool matches;
};

/// Discriminates each Bell state and checks it against the expected ancilla
/// bits with probability 1 and an unchanged channel.
std::vector<TableRow> reproduce_table();

/// Worst-case deviations of the discriminator over random 2-qubit inputs.
struct VerificationReport {
    int trials = 0;
    /// max |P(a1, a2) - |<bell(label)|psi>|^2|
    double distribution = 0;
    /// max (1 - fidelity(post | a1 a2, bell(label_from_bits(a1, a2))))
    double conditional_infidelity = 0;
    /// max |P(a1 = 1) - (1 - <XX>) / 2|
    double stabilizer_xx = 0;
    /// max |P(a2 = 1) - (1 - <ZZ>) / 2|
    double stabilizer_zz = 0;
    /// max (1 - P(same bits)) when rediscriminating a post-state
    double idempotence = 0;
    /// max deviation between the 4-qubit circuit and the staged protocol,
    /// over branch probabilities and channel-marginal infidelity
    double monolithic = 0;

    bool passed() const;
};

/// Draws `trials` random states, state i from derive_stream(seed, i).
VerificationReport verify_random_states(int trials, std::uint64_t seed);

/// Same checks on explicitly given inputs, accumulated into `report`.
void accumulate(VerificationReport &report, const StateVector &channel);

} // namespace bellsim
