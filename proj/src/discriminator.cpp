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
#include "bellsim/discriminator.hpp"

#include <algorithm>
#include <string>
#include <thread>

namespace bellsim {

namespace {

constexpr int kChannel1 = 0;
constexpr int kChannel2 = 1;
constexpr int kAncilla = 2;

void check_channel(const StateVector &channel) {
    if (channel.num_qubits() != 2) {
        throw ArgumentError("the channel must be a 2-qubit state, got " +
                            std::to_string(channel.num_qubits()));
    }
}

void check_bit(int bit) {
    if (bit != 0 && bit != 1) {
        throw ArgumentError("ancilla outcome must be 0 or 1");
    }
}

// Everything up to (not including) the ancilla measurement.
StateVector entangle_ancilla(const StateVector &channel, StageId stage) {
    check_channel(channel);
    const Gate h = standard_gate(GateName::H);
    const Gate x = standard_gate(GateName::X);

    StateVector s = tensor(channel, zero_state(1));
    if (stage == StageId::Stage2) {
        s = apply_single(s, h, kChannel1);
        s = apply_single(s, h, kChannel2);
    }
    s = apply_single(s, h, kAncilla);
    s = apply_controlled(s, x, kAncilla, kChannel1);
    s = apply_controlled(s, x, kAncilla, kChannel2);
    if (stage == StageId::Stage2) {
        s = apply_single(s, h, kChannel1);
        s = apply_single(s, h, kChannel2);
    }
    return apply_single(s, h, kAncilla);
}

StageOutcome finish_stage(const StateVector &register3, int bit) {
    auto [prob, collapsed] = project_qubit(register3, kAncilla, bit);
    return {bit, prob, drop_qubit(collapsed, kAncilla)};
}

} // namespace

StageOutcome run_stage(const StateVector &channel, StageId stage, std::optional<int> forced_bit,
                       RandomStream &rng) {
    const StateVector entangled = entangle_ancilla(channel, stage);
    if (forced_bit) {
        check_bit(*forced_bit);
        return finish_stage(entangled, *forced_bit);
    }
    const auto [p0, p1] = outcome_probs(entangled, kAncilla);
    auto [bit, collapsed] = measure_qubit(entangled, kAncilla, rng);
    return {bit, bit ? p1 : p0, drop_qubit(collapsed, kAncilla)};
}

StageOutcome run_stage(const StateVector &channel, StageId stage, int forced_bit) {
    check_bit(forced_bit);
    return finish_stage(entangle_ancilla(channel, stage), forced_bit);
}

BellLabel label_from_bits(int a1, int a2) {
    check_bit(a1);
    check_bit(a2);
    static constexpr std::array<std::array<BellLabel, 2>, 2> kTable{{
        {BellLabel::PsiPlus, BellLabel::PhiPlus},   // a1 = 0
        {BellLabel::PsiMinus, BellLabel::PhiMinus}, // a1 = 1
    }};
    return kTable[a1][a2];
}

std::pair<int, int> bits_for_label(BellLabel label) {
    switch (label) {
    case BellLabel::PsiPlus:
        return {0, 0};
    case BellLabel::PsiMinus:
        return {1, 0};
    case BellLabel::PhiPlus:
        return {0, 1};
    case BellLabel::PhiMinus:
        return {1, 1};
    }
    throw ArgumentError("unknown Bell label");
}

DiscriminationResult discriminate(const StateVector &channel, RandomStream &rng) {
    const StageOutcome first = run_stage(channel, StageId::Stage1, std::nullopt, rng);
    StageOutcome second = run_stage(first.post_channel, StageId::Stage2, std::nullopt, rng);
    return {first.bit, second.bit, label_from_bits(first.bit, second.bit),
            first.probability * second.probability, std::move(second.post_channel)};
}

DiscriminationResult discriminate_outcome(const StateVector &channel, int a1, int a2) {
    const StageOutcome first = run_stage(channel, StageId::Stage1, a1);
    StageOutcome second = run_stage(first.post_channel, StageId::Stage2, a2);
    return {a1, a2, label_from_bits(a1, a2), first.probability * second.probability,
            std::move(second.post_channel)};
}

std::vector<DiscriminationResult> discrimination_branches(const StateVector &channel) {
    std::vector<DiscriminationResult> out;
    const StateVector entangled1 = entangle_ancilla(channel, StageId::Stage1);
    const auto [p0, p1] = outcome_probs(entangled1, kAncilla);
    for (int a1 : {0, 1}) {
        if ((a1 ? p1 : p0) < tolerance::kImpossibleOutcome) {
            continue;
        }
        const StageOutcome first = finish_stage(entangled1, a1);
        const StateVector entangled2 = entangle_ancilla(first.post_channel, StageId::Stage2);
        const auto [q0, q1] = outcome_probs(entangled2, kAncilla);
        for (int a2 : {0, 1}) {
            if ((a2 ? q1 : q0) < tolerance::kImpossibleOutcome) {
                continue;
            }
            StageOutcome second = finish_stage(entangled2, a2);
            out.push_back({a1, a2, label_from_bits(a1, a2),
                           first.probability * second.probability,
                           std::move(second.post_channel)});
        }
    }
    return out;
}

BellDistribution predicted_distribution(const StateVector &channel) {
    check_channel(channel);
    BellDistribution dist{};
    for (BellLabel l : kAllBellLabels) {
        dist[index_of(l)] = fidelity_up_to_phase(bell_state(l), channel);
    }
    return dist;
}

double stabilizer_expectation(const StateVector &channel, Stabilizer which) {
    check_channel(channel);
    const Gate sigma = standard_gate(which == Stabilizer::XX ? GateName::X : GateName::Z);
    const StateVector flipped = apply_single(apply_single(channel, sigma, 0), sigma, 1);
    return inner_product(channel, flipped).real();
}

DenseCodeOutcome dense_code_demo(BellLabel start, LocalOp op, RandomStream &rng) {
    const std::array<LocalOp, 1> ops{op};
    return dense_code_demo(start, ops, rng);
}

DenseCodeOutcome dense_code_demo(BellLabel start, std::span<const LocalOp> ops, RandomStream &rng) {
    StateVector encoded = bell_state(start);
    BellLabel expected = start;
    for (LocalOp op : ops) {
        encoded = apply_local_op(encoded, op);
        expected = transform_label(op, expected);
    }
    DiscriminationResult measured = discriminate(encoded, rng);
    const double fid = fidelity_up_to_phase(encoded, measured.post_state);
    return {expected, std::move(measured), fid};
}

ShotStatistics sample_shots(const StateVector &channel, std::uint64_t shots, std::uint64_t seed,
                            unsigned threads) {
    if (shots == 0) {
        throw ArgumentError("shot count must be at least 1");
    }
    check_channel(channel);
    RandomStream rng0 = derive_stream(seed, 0);
    ShotStatistics stats{shots, {}, discriminate(channel, rng0)};
    ++stats.counts[index_of(stats.first.label)];
    if (shots == 1) {
        return stats;
    }

    constexpr std::uint64_t kMinShotsPerWorker = 4096;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    const std::uint64_t remaining = shots - 1;
    const std::uint64_t workers =
        std::clamp<std::uint64_t>(remaining / kMinShotsPerWorker, 1, threads);
    std::vector<std::array<std::uint64_t, 4>> partial(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = 1 + remaining * w / workers;
            const std::uint64_t end = 1 + remaining * (w + 1) / workers;
            pool.emplace_back([&channel, &counts = partial[w], seed, begin, end] {
                for (std::uint64_t i = begin; i < end; ++i) {
                    RandomStream rng = derive_stream(seed, i);
                    ++counts[index_of(discriminate(channel, rng).label)];
                }
            });
        }
    }
    for (const auto &c : partial) {
        for (std::size_t k = 0; k < c.size(); ++k) {
            stats.counts[k] += c[k];
        }
    }
    return stats;
}

} // namespace bellsim
