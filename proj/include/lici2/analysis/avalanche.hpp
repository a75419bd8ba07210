/*
 * Copyright 2026 The LiCi-2 Lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lici2/cipher.hpp"

namespace lici2::analysis {

enum class FlipTarget { plaintext_bit, key_bit };

struct AvalancheReport {
    std::uint64_t trials = 0;
    FlipTarget flip_target = FlipTarget::plaintext_bit;
    std::uint64_t seed = 0;
    int rounds = kRounds;
    double mean_flips = 0.0;
    std::array<std::uint64_t, 65> histogram{};
    /// Mean ciphertext flips conditioned on which input bit was flipped
    /// (64 entries for plaintext, 128 for key; 0 when a bit was never drawn).
    std::vector<double> per_bit_means;
    std::vector<std::uint64_t> per_bit_trials;
    /// Fraction of trials in which each ciphertext bit changed (bit 0 = LSB).
    std::array<double, 64> output_flip_rate{};
};

/// Each trial draws (p, k) and a flip position from SeededRng(seed), flips
/// one bit of the target and records the ciphertext Hamming distance.
/// `rounds` below 25 runs the reduced-round diagnostic.
/// Throws std::invalid_argument when trials < 1 or rounds is outside [1, 25].
AvalancheReport avalanche_test(std::uint64_t trials, FlipTarget target, std::uint64_t seed,
                               const ConventionProfile& profile, int rounds = kRounds);

}  // namespace lici2::analysis
