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
 * @file bell.hpp
 * The Bell basis and the local operations that permute it.
 *
 * Naming follows the convention
 *
 *     psi+- = (|00> +- |11>) / sqrt(2)
 *     phi+- = (|01> +- |10>) / sqrt(2)
 *
 * which swaps the letters relative to the more common Phi/Psi usage.
 */
#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "bellsim/state_vector.hpp"

namespace bellsim {

enum class BellLabel { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels{BellLabel::PsiPlus, BellLabel::PsiMinus,
                                                         BellLabel::PhiPlus, BellLabel::PhiMinus};

constexpr std::size_t index_of(BellLabel label) { return static_cast<std::size_t>(label); }

/// "psi+", "psi-", "phi+", "phi-".
std::string_view to_string(BellLabel label);
std::optional<BellLabel> parse_bell_label(std::string_view text);

/// Local operations on the two channel qubits: a Pauli on qubit 1 or 2
/// (channel qubits 0 and 1 of the register), or a Hadamard on both.
enum class LocalOp { X1, X2, Y1, Y2, Z1, Z2, HH };

inline constexpr std::array<LocalOp, 7> kAllLocalOps{LocalOp::X1, LocalOp::X2, LocalOp::Y1,
                                                     LocalOp::Y2, LocalOp::Z1, LocalOp::Z2,
                                                     LocalOp::HH};

/// "x1", "x2", "y1", "y2", "z1", "z2", "hh".
std::string_view to_string(LocalOp op);
std::optional<LocalOp> parse_local_op(std::string_view text);

StateVector bell_state(BellLabel label);

/// The label whose Bell state has fidelity >= 1 - tol with `state`, if any.
/// Throws ArgumentError unless `state` has two qubits.
std::optional<BellLabel> classify_bell(const StateVector &state, double tol = 1e-9);

/// Applies `op` to a two-qubit state.
StateVector apply_local_op(const StateVector &state, LocalOp op);

/// Label of op applied to bell_state(label), global phase discarded.
BellLabel transform_label(LocalOp op, BellLabel label);

} // namespace bellsim
