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
#include "bellsim/bell.hpp"

#include <cmath>
#include <string>

namespace bellsim {

namespace {

using B = BellLabel;

// Row = LocalOp, column = BellLabel (psi+, psi-, phi+, phi-).
constexpr std::array<std::array<BellLabel, 4>, 7> kTransformTable{{
    /* X1 */ {B::PhiPlus, B::PhiMinus, B::PsiPlus, B::PsiMinus},
    /* X2 */ {B::PhiPlus, B::PhiMinus, B::PsiPlus, B::PsiMinus},
    /* Y1 */ {B::PhiMinus, B::PhiPlus, B::PsiMinus, B::PsiPlus},
    /* Y2 */ {B::PhiMinus, B::PhiPlus, B::PsiMinus, B::PsiPlus},
    /* Z1 */ {B::PsiMinus, B::PsiPlus, B::PhiMinus, B::PhiPlus},
    /* Z2 */ {B::PsiMinus, B::PsiPlus, B::PhiMinus, B::PhiPlus},
    /* HH */ {B::PsiPlus, B::PhiPlus, B::PsiMinus, B::PhiMinus},
}};

} // namespace

std::string_view to_string(BellLabel label) {
    switch (label) {
    case BellLabel::PsiPlus:
        return "psi+";
    case BellLabel::PsiMinus:
        return "psi-";
    case BellLabel::PhiPlus:
        return "phi+";
    case BellLabel::PhiMinus:
        return "phi-";
    }
    return "?";
}

std::optional<BellLabel> parse_bell_label(std::string_view text) {
    for (BellLabel l : kAllBellLabels) {
        if (to_string(l) == text) {
            return l;
        }
    }
    return std::nullopt;
}

std::string_view to_string(LocalOp op) {
    switch (op) {
    case LocalOp::X1:
        return "x1";
    case LocalOp::X2:
        return "x2";
    case LocalOp::Y1:
        return "y1";
    case LocalOp::Y2:
        return "y2";
    case LocalOp::Z1:
        return "z1";
    case LocalOp::Z2:
        return "z2";
    case LocalOp::HH:
        return "hh";
    }
    return "?";
}

std::optional<LocalOp> parse_local_op(std::string_view text) {
    for (LocalOp op : kAllLocalOps) {
        if (to_string(op) == text) {
            return op;
        }
    }
    return std::nullopt;
}

StateVector bell_state(BellLabel label) {
    const double s = 1.0 / std::sqrt(2.0);
    StateVector::Amplitudes amps = StateVector::Amplitudes::Zero(4);
    switch (label) {
    case BellLabel::PsiPlus:
        amps(0b00) = s;
        amps(0b11) = s;
        break;
    case BellLabel::PsiMinus:
        amps(0b00) = s;
        amps(0b11) = -s;
        break;
    case BellLabel::PhiPlus:
        amps(0b01) = s;
        amps(0b10) = s;
        break;
    case BellLabel::PhiMinus:
        amps(0b01) = s;
        amps(0b10) = -s;
        break;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

std::optional<BellLabel> classify_bell(const StateVector &state, double tol) {
    if (state.num_qubits() != 2) {
        throw ArgumentError("Bell classification needs a 2-qubit state, got " +
                            std::to_string(state.num_qubits()));
    }
    // Bell states are orthonormal, so at most one can clear 1 - tol for tol < 1/2.
    for (BellLabel l : kAllBellLabels) {
        if (fidelity_up_to_phase(bell_state(l), state) >= 1.0 - tol) {
            return l;
        }
    }
    return std::nullopt;
}

StateVector apply_local_op(const StateVector &state, LocalOp op) {
    if (state.num_qubits() != 2) {
        throw ArgumentError("local operations act on a 2-qubit channel");
    }
    switch (op) {
    case LocalOp::X1:
        return apply_single(state, standard_gate(GateName::X), 0);
    case LocalOp::X2:
        return apply_single(state, standard_gate(GateName::X), 1);
    case LocalOp::Y1:
        return apply_single(state, standard_gate(GateName::Y), 0);
    case LocalOp::Y2:
        return apply_single(state, standard_gate(GateName::Y), 1);
    case LocalOp::Z1:
        return apply_single(state, standard_gate(GateName::Z), 0);
    case LocalOp::Z2:
        return apply_single(state, standard_gate(GateName::Z), 1);
    case LocalOp::HH: {
        const Gate h = standard_gate(GateName::H);
        return apply_single(apply_single(state, h, 0), h, 1);
    }
    }
    throw ArgumentError("unknown local operation");
}

BellLabel transform_label(LocalOp op, BellLabel label) {
    return kTransformTable[static_cast<std::size_t>(op)][index_of(label)];
}

} // namespace bellsim
