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
 * @file circuit.hpp
 * A line-oriented circuit format and its interpreter.
 *
 * Grammar (one statement per line, `#` starts a comment, blank lines and
 * trailing CR are ignored, operands are base-10 integers):
 *
 *     qubits <n>                 first statement, exactly once
 *     i|x|y|z|h <q>
 *     cx <control> <target>
 *     measure <q>
 */
#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bellsim/gates.hpp"
#include "bellsim/rng.hpp"
#include "bellsim/state_vector.hpp"

namespace bellsim {

/// Base for circuit-text diagnostics; line() is 1-based, 0 when the error
/// is not tied to a line.
class CircuitError : public std::runtime_error {
  public:
    CircuitError(const std::string &what, int line)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const noexcept { return line_; }

  private:
    int line_;
};

/// Malformed text: unknown mnemonic, bad operand, missing header.
class ParseError : public CircuitError {
  public:
    using CircuitError::CircuitError;
};

/// Well-formed text that violates a circuit invariant (index out of range,
/// control == target, qubit count out of range).
class ValidationError : public CircuitError {
  public:
    using CircuitError::CircuitError;
};

namespace op {
struct Gate {
    GateName name;
    int qubit;
    friend bool operator==(const Gate &, const Gate &) = default;
};
struct Controlled {
    GateName name;
    int control;
    int target;
    friend bool operator==(const Controlled &, const Controlled &) = default;
};
struct Measure {
    int qubit;
    friend bool operator==(const Measure &, const Measure &) = default;
};
} // namespace op

using CircuitOp = std::variant<op::Gate, op::Controlled, op::Measure>;

class Circuit {
  public:
    /// Validates every op against `num_qubits`; throws ValidationError with
    /// line() == 0 on failure.
    Circuit(int num_qubits, std::vector<CircuitOp> ops);

    int num_qubits() const noexcept { return num_qubits_; }
    const std::vector<CircuitOp> &ops() const noexcept { return ops_; }
    std::size_t measurement_count() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    int num_qubits_;
    std::vector<CircuitOp> ops_;
};

Circuit parse_circuit(std::string_view text);

/// Canonical text for `circuit`; parse_circuit(render_circuit(c)) == c.
std::string render_circuit(const Circuit &circuit);

struct RunResult {
    StateVector final_state;
    std::vector<int> classical_bits;
    /// Product of the probabilities of the recorded outcomes.
    double probability = 1.0;
};

/// Applies ops in order starting from `initial` (|0...0> by default).
/// Each measure samples from `rng`, collapses the state in place and
/// appends one classical bit.
RunResult run_circuit(const Circuit &circuit, const std::optional<StateVector> &initial,
                      RandomStream &rng);

/// Like run_circuit but the k-th measurement is projected onto
/// `outcomes[k]`. Throws ImpossibleOutcomeError for zero-probability
/// branches and ArgumentError when the outcome count does not match.
RunResult run_circuit_forced(const Circuit &circuit, const std::optional<StateVector> &initial,
                             std::span<const int> outcomes);

/// The two-ancilla discriminator on a 4-qubit register: qubits 0, 1 carry
/// the channel, qubit 2 is the first ancilla and qubit 3 the second.
Circuit discriminator_circuit();

/// Channel state left on qubits 0 and 1 after discriminator_circuit() has
/// measured both ancillas.
StateVector channel_marginal(const RunResult &result);

} // namespace bellsim
