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

#include <tuple>

#include "kernels.hpp"

namespace lici2::simd {

void encrypt_scalar(const Block64* in, Block64* out, std::size_t n, const HalfWord32* rk,
                    int rounds, const ConventionProfile& profile) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        auto [l, r] = split_block(in[i], profile);
        for (int j = 0; j < rounds; ++j)
            std::tie(l, r) = round_forward(l, r, rk[j]);
        out[i] = join_block(l, r, profile);
    }
}

void decrypt_scalar(const Block64* in, Block64* out, std::size_t n, const HalfWord32* rk,
                    int rounds, const ConventionProfile& profile) noexcept {
    for (std::size_t i = 0; i < n; ++i) {
        auto [l, r] = unjoin_block(in[i], profile);
        for (int j = rounds - 1; j >= 0; --j)
            std::tie(l, r) = round_inverse(l, r, rk[j]);
        out[i] = unsplit_block(l, r, profile);
    }
}

}  // namespace lici2::simd
