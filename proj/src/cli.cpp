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
#include "bellsim/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <vector>

#include "bellsim/bell.hpp"
#include "bellsim/circuit.hpp"
#include "bellsim/discriminator.hpp"
#include "bellsim/verification.hpp"

namespace bellsim::cli {

namespace {

using json = nlohmann::ordered_json;

/// Amplitude input may be off by this much in norm before it is rejected.
constexpr double kAmplitudeNormGate = 1e-6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string sci(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

double round_to(double v, int digits) {
    const double scale = std::pow(10.0, digits);
    return std::round(v * scale) / scale;
}

BellLabel require_label(const std::string &text) {
    const auto label = parse_bell_label(text);
    if (!label) {
        throw UsageError("unknown Bell state '" + text + "' (expected psi+, psi-, phi+ or phi-)");
    }
    return *label;
}

/// "re,im,re,im,re,im,re,im" in |00>, |01>, |10>, |11> order.
StateVector parse_amplitudes(const std::string &text) {
    std::vector<double> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) {
            comma = text.size();
        }
        const char *first = text.data() + pos;
        const char *last = text.data() + comma;
        double v = 0;
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
            throw UsageError("--amps: cannot parse '" + std::string(first, last) + "' as a real");
        }
        values.push_back(v);
        pos = comma + 1;
    }
    if (values.size() != 8) {
        throw UsageError("--amps takes 8 comma-separated reals, got " +
                         std::to_string(values.size()));
    }
    StateVector::Amplitudes amps(4);
    for (int i = 0; i < 4; ++i) {
        amps(i) = {values[2 * i], values[2 * i + 1]};
    }
    const double norm = amps.norm();
    if (std::abs(norm - 1.0) > kAmplitudeNormGate) {
        throw UsageError("--amps: norm " + std::to_string(norm) + " is not within 1e-6 of 1");
    }
    return StateVector::normalized(std::move(amps));
}

json bits_json(int a1, int a2) { return json::array({a1, a2}); }

std::string result_line(const DiscriminationResult &r, double fidelity) {
    return "a1=" + std::to_string(r.a1) + " a2=" + std::to_string(r.a2) +
           " label=" + std::string(to_string(r.label)) +
           " probability=" + fixed(r.outcome_prob, 12) + " fidelity=" + fixed(fidelity, 12);
}

CliResult run_table(bool as_json) {
    const auto rows = reproduce_table();
    bool passed = true;
    std::ostringstream out;
    json j;
    j["rows"] = json::array();
    if (!as_json) {
        out << "state  A1  A2  probability     fidelity\n";
    }
    for (const TableRow &r : rows) {
        passed = passed && r.matches;
        if (as_json) {
            j["rows"].push_back({{"label", to_string(r.label)},
                                 {"bits", bits_json(r.a1, r.a2)},
                                 {"probability", r.probability},
                                 {"fidelity", r.fidelity},
                                 {"matches", r.matches}});
        } else {
            out << to_string(r.label) << "   " << r.a1 << "   " << r.a2 << "   "
                << fixed(r.probability, 12) << "  " << fixed(r.fidelity, 12)
                << (r.matches ? "" : "  MISMATCH") << '\n';
        }
    }
    if (as_json) {
        j["passed"] = passed;
        out << j.dump() << '\n';
    }
    CliResult res{passed ? kExitOk : kExitVerificationFailed, out.str(), {}};
    if (!passed) {
        res.err = "table: discriminator output deviates from the expected table\n";
    }
    return res;
}

CliResult run_discriminate(const std::string &state_name, const std::string &amps,
                           std::uint64_t shots, std::uint64_t seed, bool as_json) {
    const StateVector channel = state_name.empty() ? parse_amplitudes(amps)
                                                   : bell_state(require_label(state_name));
    const ShotStatistics stats = sample_shots(channel, shots, seed);
    const DiscriminationResult &first = stats.first;
    const double fidelity = fidelity_up_to_phase(channel, first.post_state);
    const BellDistribution predicted = predicted_distribution(channel);

    std::ostringstream out;
    if (as_json) {
        json freqs = json::object();
        json pred = json::object();
        for (BellLabel l : kAllBellLabels) {
            const double f =
                static_cast<double>(stats.counts[index_of(l)]) / static_cast<double>(shots);
            freqs[std::string(to_string(l))] = round_to(f, 6);
            pred[std::string(to_string(l))] = round_to(predicted[index_of(l)], 6);
        }
        json j;
        j["bits"] = bits_json(first.a1, first.a2);
        j["label"] = to_string(first.label);
        j["probability"] = first.outcome_prob;
        j["fidelity"] = fidelity;
        j["shots"] = shots;
        j["seed"] = seed;
        j["frequencies"] = freqs;
        j["predicted"] = pred;
        out << j.dump() << '\n';
    } else if (shots == 1) {
        out << result_line(first, fidelity) << '\n';
    } else {
        out << "shots=" << shots << " seed=" << seed << '\n';
        out << "label  bits  frequency  predicted\n";
        for (BellLabel l : kAllBellLabels) {
            const auto [a1, a2] = bits_for_label(l);
            const double f =
                static_cast<double>(stats.counts[index_of(l)]) / static_cast<double>(shots);
            out << to_string(l) << "   " << a1 << a2 << "    " << fixed(f, 6) << "   "
                << fixed(predicted[index_of(l)], 6) << '\n';
        }
    }
    return {kExitOk, out.str(), {}};
}

CliResult run_demo_dense(const std::string &state_name, const std::string &op_name,
                         std::uint64_t seed, bool as_json) {
    const BellLabel start = require_label(state_name);
    const auto op = parse_local_op(op_name);
    if (!op) {
        throw UsageError("unknown operation '" + op_name +
                         "' (expected x1, x2, y1, y2, z1, z2 or hh)");
    }
    RandomStream rng = derive_stream(seed, 0);
    const DenseCodeOutcome demo = dense_code_demo(start, *op, rng);
    const DiscriminationResult &m = demo.measured;
    const bool ok = m.label == demo.expected &&
                    std::abs(m.outcome_prob - 1.0) <= tolerance::kTableProbability &&
                    1.0 - demo.post_fidelity <= tolerance::kTableFidelity;

    std::ostringstream out;
    if (as_json) {
        json j;
        j["start"] = to_string(start);
        j["op"] = to_string(*op);
        j["expected"] = to_string(demo.expected);
        j["bits"] = bits_json(m.a1, m.a2);
        j["label"] = to_string(m.label);
        j["probability"] = m.outcome_prob;
        j["fidelity"] = demo.post_fidelity;
        j["passed"] = ok;
        out << j.dump() << '\n';
    } else {
        out << "start=" << to_string(start) << " op=" << to_string(*op)
            << " expected=" << to_string(demo.expected) << ' '
            << result_line(m, demo.post_fidelity) << '\n';
    }
    CliResult res{ok ? kExitOk : kExitVerificationFailed, out.str(), {}};
    if (!ok) {
        res.err = "demo-dense: decoded label does not match the encoded one\n";
    }
    return res;
}

CliResult run_verify(int trials, std::uint64_t seed, bool as_json) {
    const VerificationReport r = verify_random_states(trials, seed);
    struct Line {
        const char *name;
        double value;
        double tol;
        bool ok;
    };
    const std::vector<Line> lines{
        {"distribution", r.distribution, tolerance::kDistribution,
         r.distribution < tolerance::kDistribution},
        {"conditional_infidelity", r.conditional_infidelity, tolerance::kConditionalFidelity,
         r.conditional_infidelity <= tolerance::kConditionalFidelity},
        {"stabilizer_xx", r.stabilizer_xx, tolerance::kStabilizer,
         r.stabilizer_xx <= tolerance::kStabilizer},
        {"stabilizer_zz", r.stabilizer_zz, tolerance::kStabilizer,
         r.stabilizer_zz <= tolerance::kStabilizer},
        {"idempotence", r.idempotence, tolerance::kIdempotence,
         r.idempotence <= tolerance::kIdempotence},
        {"monolithic", r.monolithic, tolerance::kMonolithic,
         r.monolithic <= tolerance::kMonolithic},
    };
    const bool passed = r.passed();
    std::ostringstream out;
    if (as_json) {
        json j;
        j["trials"] = r.trials;
        j["seed"] = seed;
        json checks = json::object();
        for (const Line &l : lines) {
            checks[l.name] = {{"max_deviation", l.value}, {"tolerance", l.tol}, {"passed", l.ok}};
        }
        j["checks"] = checks;
        j["passed"] = passed;
        out << j.dump() << '\n';
    } else {
        out << "trials=" << r.trials << " seed=" << seed << '\n';
        for (const Line &l : lines) {
            char buf[128];
            std::snprintf(buf, sizeof buf, "%-24s max=%s  tol=%s  %s\n", l.name,
                          sci(l.value).c_str(), sci(l.tol).c_str(), l.ok ? "PASS" : "FAIL");
            out << buf;
        }
    }
    CliResult res{passed ? kExitOk : kExitVerificationFailed, out.str(), {}};
    if (!passed) {
        res.err = "verify: tolerance breached\n";
    }
    return res;
}

} // namespace

CliResult execute(std::span<const std::string> args) {
    CLI::App app{"Non-destructive Bell-state discrimination simulator", "bellsim"};
    app.require_subcommand(1);

    bool as_json = false;
    std::uint64_t seed = 0;

    auto *table = app.add_subcommand("table", "Discriminate each Bell state and print A1/A2");
    table->add_flag("--json", as_json, "Emit JSON");

    std::string state_name;
    std::string amps;
    std::uint64_t shots = 1;
    auto *disc = app.add_subcommand("discriminate", "Discriminate a channel state");
    auto *state_opt = disc->add_option("--state", state_name, "psi+, psi-, phi+ or phi-");
    auto *amps_opt = disc->add_option("--amps", amps,
                                      "8 comma-separated reals: re,im for |00>,|01>,|10>,|11>");
    state_opt->excludes(amps_opt);
    disc->add_option("--shots", shots, "Number of shots")->check(CLI::PositiveNumber);
    disc->add_option("--seed", seed, "Random seed");
    disc->add_flag("--json", as_json, "Emit JSON");

    std::string demo_state;
    std::string op_name;
    auto *demo = app.add_subcommand("demo-dense", "Encode a local operation and read it back");
    demo->add_option("--state", demo_state, "Starting Bell state")->required();
    demo->add_option("--op", op_name, "x1, x2, y1, y2, z1, z2 or hh")->required();
    demo->add_option("--seed", seed, "Random seed");
    demo->add_flag("--json", as_json, "Emit JSON");

    auto *print = app.add_subcommand("print-circuit", "Print the 4-qubit discriminator circuit");

    int trials = 1000;
    auto *verify = app.add_subcommand("verify", "Random-state property checks");
    verify->add_option("--trials", trials, "Number of random states")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "Random seed");
    verify->add_flag("--json", as_json, "Emit JSON");

    // CLI11 consumes a reversed argument vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
        if (disc->parsed() && state_name.empty() && amps.empty()) {
            throw CLI::RequiredError("--state or --amps");
        }
    } catch (const CLI::CallForHelp &) {
        return {kExitOk, app.help(), {}};
    } catch (const CLI::ParseError &e) {
        std::string usage = app.help();
        for (const CLI::App *sub : app.get_subcommands()) {
            usage = sub->help();
        }
        return {kExitUsage, {}, "error: " + std::string(e.what()) + "\n\n" + usage};
    }

    try {
        if (table->parsed()) {
            return run_table(as_json);
        }
        if (disc->parsed()) {
            return run_discriminate(state_name, amps, shots, seed, as_json);
        }
        if (demo->parsed()) {
            return run_demo_dense(demo_state, op_name, seed, as_json);
        }
        if (print->parsed()) {
            return {kExitOk, render_circuit(discriminator_circuit()), {}};
        }
        if (verify->parsed()) {
            return run_verify(trials, seed, as_json);
        }
    } catch (const UsageError &e) {
        return {kExitUsage, {}, "error: " + std::string(e.what()) + "\n"};
    } catch (const ArgumentError &e) {
        return {kExitUsage, {}, "error: " + std::string(e.what()) + "\n"};
    }
    return {kExitUsage, {}, app.help()};
}

} // namespace bellsim::cli
