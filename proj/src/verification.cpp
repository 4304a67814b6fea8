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
#include "bellsim/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bellsim/circuit.hpp"

namespace bellsim {

std::vector<TableRow> reproduce_table() {
    std::vector<TableRow> rows;
    for (BellLabel label : kAllBellLabels) {
        const StateVector input = bell_state(label);
        const auto branches = discrimination_branches(input);
        // A Bell input has exactly one branch.
        const DiscriminationResult &r = branches.front();
        const double fid = fidelity_up_to_phase(input, r.post_state);
        const auto [e1, e2] = bits_for_label(label);
        const bool ok = branches.size() == 1 && r.a1 == e1 && r.a2 == e2 && r.label == label &&
                        std::abs(r.outcome_prob - 1.0) <= tolerance::kTableProbability &&
                        1.0 - fid <= tolerance::kTableFidelity;
        rows.push_back({label, r.a1, r.a2, r.outcome_prob, fid, ok});
    }
    return rows;
}

bool VerificationReport::passed() const {
    return distribution < tolerance::kDistribution &&
           conditional_infidelity <= tolerance::kConditionalFidelity &&
           stabilizer_xx <= tolerance::kStabilizer && stabilizer_zz <= tolerance::kStabilizer &&
           idempotence <= tolerance::kIdempotence && monolithic <= tolerance::kMonolithic;
}

void accumulate(VerificationReport &report, const StateVector &channel) {
    const BellDistribution predicted = predicted_distribution(channel);
    const auto branches = discrimination_branches(channel);
    const Circuit circuit = discriminator_circuit();

    std::array<double, 4> observed{};
    double p_a1 = 0;
    double p_a2 = 0;
    for (const DiscriminationResult &r : branches) {
        observed[index_of(r.label)] = r.outcome_prob;
        p_a1 += r.a1 ? r.outcome_prob : 0.0;
        p_a2 += r.a2 ? r.outcome_prob : 0.0;

        const double fid = fidelity_up_to_phase(bell_state(r.label), r.post_state);
        report.conditional_infidelity = std::max(report.conditional_infidelity, 1.0 - fid);

        const DiscriminationResult again = discriminate_outcome(r.post_state, r.a1, r.a2);
        report.idempotence = std::max(report.idempotence, std::abs(1.0 - again.outcome_prob));

        const std::array<int, 2> bits{r.a1, r.a2};
        const RunResult run =
            run_circuit_forced(circuit, tensor(channel, zero_state(2)), bits);
        const double marginal_fid = fidelity_up_to_phase(channel_marginal(run), r.post_state);
        report.monolithic = std::max(
            {report.monolithic, std::abs(run.probability - r.outcome_prob), 1.0 - marginal_fid});
    }
    for (std::size_t i = 0; i < observed.size(); ++i) {
        report.distribution = std::max(report.distribution, std::abs(observed[i] - predicted[i]));
    }
    const double xx = stabilizer_expectation(channel, Stabilizer::XX);
    const double zz = stabilizer_expectation(channel, Stabilizer::ZZ);
    report.stabilizer_xx = std::max(report.stabilizer_xx, std::abs(p_a1 - (1.0 - xx) / 2.0));
    report.stabilizer_zz = std::max(report.stabilizer_zz, std::abs(p_a2 - (1.0 - zz) / 2.0));
    ++report.trials;
}

VerificationReport verify_random_states(int trials, std::uint64_t seed) {
    VerificationReport report;
    for (int i = 0; i < trials; ++i) {
        RandomStream rng = derive_stream(seed, static_cast<std::uint64_t>(i));
        accumulate(report, random_state(2, rng));
    }
    return report;
}

} // namespace bellsim
