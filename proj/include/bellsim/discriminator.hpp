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
 * @file discriminator.hpp
 * Non-destructive Bell-state discrimination with two ancillas.
 *
 * Each stage adjoins a fresh ancilla |0> as a third qubit, entangles it
 * with both channel qubits through ancilla-controlled X gates and measures
 * only the ancilla:
 *
 *   Stage1:  H(a) . CX(a->x1) . CX(a->x2) . H(a)
 *            phase kickback writes the X(x)X eigenvalue onto the ancilla.
 *   Stage2:  H(x1,x2,a) . CX(a->x1) . CX(a->x2) . H(x1,x2,a)
 *            the Hadamard sandwich turns the same kickback into Z(x)Z.
 *
 * Bell states are joint eigenstates of X(x)X and Z(x)Z, so both readouts are
 * deterministic and the channel comes back unchanged (up to global phase).
 *
 *   (a1, a2) = (0,0) psi+   (1,0) psi-   (0,1) phi+   (1,1) phi-
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bellsim/bell.hpp"
#include "bellsim/rng.hpp"
#include "bellsim/state_vector.hpp"

namespace bellsim {

enum class StageId { Stage1, Stage2 };

struct StageOutcome {
    int bit;
    double probability;
    StateVector post_channel;
};

struct DiscriminationResult {
    int a1;
    int a2;
    BellLabel label;
    double outcome_prob;
    StateVector post_state;
};

/// Probabilities indexed by index_of(BellLabel).
using BellDistribution = std::array<double, 4>;

enum class Stabilizer { XX, ZZ };

/// Runs one ancilla stage on a normalized 2-qubit channel. With
/// `forced_bit` the ancilla is projected onto that value (throwing
/// ImpossibleOutcomeError when it has probability below 1e-14); otherwise
/// it is sampled from `rng`.
StageOutcome run_stage(const StateVector &channel, StageId stage, std::optional<int> forced_bit,
                       RandomStream &rng);

/// Projected variant of run_stage, no randomness involved.
StageOutcome run_stage(const StateVector &channel, StageId stage, int forced_bit);

/// The (a1, a2) -> label lookup.
BellLabel label_from_bits(int a1, int a2);

/// Inverse of label_from_bits.
std::pair<int, int> bits_for_label(BellLabel label);

/// Stage1 then Stage2, sampled.
DiscriminationResult discriminate(const StateVector &channel, RandomStream &rng);

/// Stage1 then Stage2 with both ancilla outcomes forced.
DiscriminationResult discriminate_outcome(const StateVector &channel, int a1, int a2);

/// Every (a1, a2) branch with probability >= 1e-14, in (a1, a2) order.
std::vector<DiscriminationResult> discrimination_branches(const StateVector &channel);

/// |<bell_state(L)|channel>|^2 for each label L.
BellDistribution predicted_distribution(const StateVector &channel);

/// <channel| sigma (x) sigma |channel> for sigma in {X, Z}.
double stabilizer_expectation(const StateVector &channel, Stabilizer which);

struct DenseCodeOutcome {
    BellLabel expected;
    DiscriminationResult measured;
    /// Fidelity of measured.post_state with the encoded (pre-discrimination) state.
    double post_fidelity;
};

/// Encodes `op` onto bell_state(start) and reads it back with discriminate.
DenseCodeOutcome dense_code_demo(BellLabel start, LocalOp op, RandomStream &rng);

/// Applies `ops` in order before reading back; expected is the label after
/// folding transform_label over the sequence.
DenseCodeOutcome dense_code_demo(BellLabel start, std::span<const LocalOp> ops, RandomStream &rng);

/// Aggregate of many independent discriminations of the same input.
struct ShotStatistics {
    std::uint64_t shots = 0;
    /// Outcome counts indexed by index_of(label).
    std::array<std::uint64_t, 4> counts{};
    /// Shot 0, kept for single-shot reporting.
    DiscriminationResult first;
};

/// Runs `shots` >= 1 discriminations; shot i draws from
/// derive_stream(seed, i), so the result does not depend on `threads`
/// (0 picks the hardware concurrency).
ShotStatistics sample_shots(const StateVector &channel, std::uint64_t shots, std::uint64_t seed,
                            unsigned threads = 0);

} // namespace bellsim
