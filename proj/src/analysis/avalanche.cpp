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

#include "lici2/analysis/avalanche.hpp"

#include <bit>
#include <stdexcept>

#include "lici2/rng.hpp"

namespace lici2::analysis {

AvalancheReport avalanche_test(std::uint64_t trials, FlipTarget target, std::uint64_t seed,
                               const ConventionProfile& profile, int rounds) {
    if (trials < 1)
        throw std::invalid_argument("avalanche needs at least one trial");
    if (rounds < 1 || rounds > kRounds)
        throw std::invalid_argument("rounds must be in [1, 25]");

    AvalancheReport rep;
    rep.trials = trials;
    rep.flip_target = target;
    rep.seed = seed;
    rep.rounds = rounds;
    const unsigned width = target == FlipTarget::plaintext_bit ? 64 : 128;
    std::vector<std::uint64_t> per_bit_sum(width, 0);
    rep.per_bit_trials.assign(width, 0);
    std::array<std::uint64_t, 64> out_flips{};

    SeededRng rng(seed);
    std::uint64_t total = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        const Block64 p = rng.block();
        const Key128 k = rng.key();
        const auto bit = static_cast<unsigned>(rng.below_pow2(width));

        const RoundKeys rk = key_schedule(k, profile);
        const Block64 c1 = encrypt_with_schedule(p, rk, profile, rounds);
        Block64 c2;
        if (target == FlipTarget::plaintext_bit)
            c2 = encrypt_with_schedule(Block64{p.bits ^ (std::uint64_t{1} << bit)}, rk, profile, rounds);
        else
            c2 = encrypt_with_schedule(p, key_schedule(k.with_bit_flipped(bit), profile), profile, rounds);

        const std::uint64_t diff = c1.bits ^ c2.bits;
        const int d = std::popcount(diff);
        ++rep.histogram[d];
        total += static_cast<std::uint64_t>(d);
        per_bit_sum[bit] += static_cast<std::uint64_t>(d);
        ++rep.per_bit_trials[bit];
        for (int i = 0; i < 64; ++i)
            out_flips[i] += (diff >> i) & 1;
    }
    rep.mean_flips = static_cast<double>(total) / static_cast<double>(trials);
    rep.per_bit_means.resize(width);
    for (unsigned i = 0; i < width; ++i)
        rep.per_bit_means[i] = rep.per_bit_trials[i] == 0
                                   ? 0.0
                                   : static_cast<double>(per_bit_sum[i]) /
                                         static_cast<double>(rep.per_bit_trials[i]);
    for (int i = 0; i < 64; ++i)
        rep.output_flip_rate[i] = static_cast<double>(out_flips[i]) / static_cast<double>(trials);
    return rep;
}

}  // namespace lici2::analysis
