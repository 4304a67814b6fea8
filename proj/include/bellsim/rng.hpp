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
#include <random>

namespace bellsim {

using RandomStream = std::mt19937_64;

/// Independent stream for shot `index` of a run seeded with `seed`. The
/// result depends only on (seed, index), so shots can be evaluated in any
/// order or on any thread.
inline RandomStream derive_stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return RandomStream(seq);
}

/// Uniform real in [0, 1) built from the top 53 bits of one engine draw.
template <typename URBG> double uniform_unit(URBG &rng) {
    static_assert(URBG::max() - URBG::min() == ~std::uint64_t{0}, "needs a 64-bit engine");
    return static_cast<double>((rng() - URBG::min()) >> 11) * 0x1.0p-53;
}

} // namespace bellsim
