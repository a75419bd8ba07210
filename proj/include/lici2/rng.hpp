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

#include <cstdint>
#include <random>

#include "lici2/block.hpp"

namespace lici2 {

/// Portable seeded generator. std::mt19937_64's output sequence is fixed by
/// the C++ standard, and only raw 64-bit draws are used (no distribution
/// objects, whose algorithms are implementation-defined), so a seed yields
/// the same stream on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }
    std::uint32_t next_u32() { return static_cast<std::uint32_t>(engine_() >> 32); }
    /// Uniform in [0, bound) for bound a power of two.
    std::uint64_t below_pow2(std::uint64_t bound) { return engine_() & (bound - 1); }
    /// Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound);

    Block64 block() { return Block64{next_u64()}; }
    Key128 key() {
        const std::uint64_t hi = next_u64();
        return Key128{hi, next_u64()};
    }

private:
    std::mt19937_64 engine_;
};

inline std::uint64_t SeededRng::below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

}  // namespace lici2
