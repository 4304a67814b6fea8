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
#include "bellsim/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace bellsim {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

void validate_op(const CircuitOp &o, int num_qubits, int line) {
    auto check = [&](int q) {
        if (q < 0 || q >= num_qubits) {
            throw ValidationError("qubit " + std::to_string(q) + " out of range for " +
                                      std::to_string(num_qubits) + " qubits",
                                  line);
        }
    };
    std::visit(overloaded{
                   [&](const op::Gate &g) { check(g.qubit); },
                   [&](const op::Controlled &c) {
                       check(c.control);
                       check(c.target);
                       if (c.control == c.target) {
                           throw ValidationError("control and target are both qubit " +
                                                     std::to_string(c.control),
                                                 line);
                       }
                   },
                   [&](const op::Measure &m) { check(m.qubit); },
               },
               o);
}

void validate_qubit_count(int n, int line) {
    if (n < 1 || n > kMaxQubits) {
        throw ValidationError("qubit count " + std::to_string(n) + " outside [1, " +
                                  std::to_string(kMaxQubits) + "]",
                              line);
    }
}

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') {
            ++i;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

int parse_int(std::string_view word, int line) {
    int value = 0;
    const char *first = word.data();
    const char *last = word.data() + word.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, 10);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("expected a base-10 integer, got '" + std::string(word) + "'", line);
    }
    return value;
}

void expect_operands(const std::vector<std::string_view> &words, std::size_t count, int line) {
    if (words.size() != count + 1) {
        throw ParseError("'" + std::string(words[0]) + "' takes " + std::to_string(count) +
                             " operand" + (count == 1 ? "" : "s") + ", got " +
                             std::to_string(words.size() - 1),
                         line);
    }
}

StateVector apply_op(const StateVector &s, const CircuitOp &o) {
    return std::visit(overloaded{
                          [&](const op::Gate &g) {
                              return apply_single(s, standard_gate(g.name), g.qubit);
                          },
                          [&](const op::Controlled &c) {
                              return apply_controlled(s, standard_gate(c.name), c.control,
                                                      c.target);
                          },
                          [&](const op::Measure &) -> StateVector {
                              throw std::logic_error("measure handled by the caller");
                          },
                      },
                      o);
}

StateVector initial_state(const Circuit &circuit, const std::optional<StateVector> &initial) {
    if (!initial) {
        return zero_state(circuit.num_qubits());
    }
    if (initial->num_qubits() != circuit.num_qubits()) {
        throw ArgumentError("initial state has " + std::to_string(initial->num_qubits()) +
                            " qubits, circuit declares " + std::to_string(circuit.num_qubits()));
    }
    return *initial;
}

// Shared driver; `choose` picks the outcome for a measurement given its
// index and the state just before it.
template <typename Choose>
RunResult run_with(const Circuit &circuit, const std::optional<StateVector> &initial,
                   Choose &&choose) {
    RunResult result{initial_state(circuit, initial), {}, 1.0};
    for (const CircuitOp &o : circuit.ops()) {
        if (const auto *m = std::get_if<op::Measure>(&o)) {
            const int bit = choose(result.classical_bits.size(), result.final_state, m->qubit);
            auto [prob, collapsed] = project_qubit(result.final_state, m->qubit, bit);
            result.final_state = std::move(collapsed);
            result.probability *= prob;
            result.classical_bits.push_back(bit);
        } else {
            result.final_state = apply_op(result.final_state, o);
        }
    }
    return result;
}

} // namespace

Circuit::Circuit(int num_qubits, std::vector<CircuitOp> ops)
    : num_qubits_(num_qubits), ops_(std::move(ops)) {
    validate_qubit_count(num_qubits_, 0);
    for (const CircuitOp &o : ops_) {
        validate_op(o, num_qubits_, 0);
    }
}

std::size_t Circuit::measurement_count() const {
    return static_cast<std::size_t>(std::count_if(ops_.begin(), ops_.end(), [](const CircuitOp &o) {
        return std::holds_alternative<op::Measure>(o);
    }));
}

Circuit parse_circuit(std::string_view text) {
    std::optional<int> num_qubits;
    std::vector<CircuitOp> ops;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        const std::string_view head = words[0];

        if (!num_qubits) {
            if (head != "qubits") {
                throw ParseError("expected 'qubits <n>' header before '" + std::string(head) + "'",
                                 line_no);
            }
            expect_operands(words, 1, line_no);
            const int n = parse_int(words[1], line_no);
            validate_qubit_count(n, line_no);
            num_qubits = n;
            continue;
        }

        CircuitOp o;
        if (head == "qubits") {
            throw ParseError("duplicate 'qubits' header", line_no);
        } else if (head == "cx") {
            expect_operands(words, 2, line_no);
            o = op::Controlled{GateName::X, parse_int(words[1], line_no),
                               parse_int(words[2], line_no)};
        } else if (head == "measure") {
            expect_operands(words, 1, line_no);
            o = op::Measure{parse_int(words[1], line_no)};
        } else if (const auto g = gate_from_mnemonic(head)) {
            expect_operands(words, 1, line_no);
            o = op::Gate{*g, parse_int(words[1], line_no)};
        } else {
            throw ParseError("unknown mnemonic '" + std::string(head) + "'", line_no);
        }
        validate_op(o, *num_qubits, line_no);
        ops.push_back(o);
    }
    if (!num_qubits) {
        throw ParseError("missing 'qubits <n>' header", 0);
    }
    return Circuit(*num_qubits, std::move(ops));
}

std::string render_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "qubits " << circuit.num_qubits() << '\n';
    for (const CircuitOp &o : circuit.ops()) {
        std::visit(overloaded{
                       [&](const op::Gate &g) { out << mnemonic(g.name) << ' ' << g.qubit; },
                       [&](const op::Controlled &c) {
                           out << 'c' << mnemonic(c.name) << ' ' << c.control << ' ' << c.target;
                       },
                       [&](const op::Measure &m) { out << "measure " << m.qubit; },
                   },
                   o);
        out << '\n';
    }
    return out.str();
}

RunResult run_circuit(const Circuit &circuit, const std::optional<StateVector> &initial,
                      RandomStream &rng) {
    return run_with(circuit, initial, [&](std::size_t, const StateVector &s, int qubit) {
        return measure_qubit(s, qubit, rng).bit;
    });
}

RunResult run_circuit_forced(const Circuit &circuit, const std::optional<StateVector> &initial,
                             std::span<const int> outcomes) {
    if (outcomes.size() != circuit.measurement_count()) {
        throw ArgumentError("circuit has " + std::to_string(circuit.measurement_count()) +
                            " measurements, got " + std::to_string(outcomes.size()) +
                            " forced outcomes");
    }
    return run_with(circuit, initial,
                    [&](std::size_t k, const StateVector &, int) { return outcomes[k]; });
}

Circuit discriminator_circuit() {
    using op::Controlled;
    using op::Gate;
    using op::Measure;
    constexpr int x1 = 0;
    constexpr int x2 = 1;
    constexpr int a1 = 2;
    constexpr int a2 = 3;
    return Circuit(4, {
                          // X(x)X parity onto A1
                          Gate{GateName::H, a1},
                          Controlled{GateName::X, a1, x1},
                          Controlled{GateName::X, a1, x2},
                          Gate{GateName::H, a1},
                          Measure{a1},
                          // Z(x)Z parity onto A2
                          Gate{GateName::H, x1},
                          Gate{GateName::H, x2},
                          Gate{GateName::H, a2},
                          Controlled{GateName::X, a2, x1},
                          Controlled{GateName::X, a2, x2},
                          Gate{GateName::H, x1},
                          Gate{GateName::H, x2},
                          Gate{GateName::H, a2},
                          Measure{a2},
                      });
}

StateVector channel_marginal(const RunResult &result) {
    if (result.final_state.num_qubits() != 4 || result.classical_bits.size() != 2) {
        throw ArgumentError("channel_marginal expects a finished 4-qubit discriminator run");
    }
    return drop_qubit(drop_qubit(result.final_state, 3), 2);
}

} // namespace bellsim
