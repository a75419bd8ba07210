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

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace lici2 {

/// One 32-bit half of the cipher state.
using HalfWord32 = std::uint32_t;

/// 64-bit cipher block. Bit 63 is the most significant plaintext bit.
struct Block64 {
    std::uint64_t bits = 0;

    constexpr HalfWord32 hi() const noexcept { return static_cast<HalfWord32>(bits >> 32); }
    constexpr HalfWord32 lo() const noexcept { return static_cast<HalfWord32>(bits); }

    static constexpr Block64 join(HalfWord32 hi, HalfWord32 lo) noexcept {
        return Block64{(static_cast<std::uint64_t>(hi) << 32) | lo};
    }

    friend constexpr auto operator<=>(const Block64&, const Block64&) = default;
};

/// 128-bit master key, held as two big-endian 64-bit words.
/// Bit 127 (k127) is the MSB of `hi`; bit 0 (k0) is the LSB of `lo`.
struct Key128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;

    constexpr bool bit(unsigned i) const noexcept {
        return i >= 64 ? ((hi >> (i - 64)) & 1U) : ((lo >> i) & 1U);
    }
    constexpr Key128 with_bit_flipped(unsigned i) const noexcept {
        Key128 k = *this;
        if (i >= 64)
            k.hi ^= std::uint64_t{1} << (i - 64);
        else
            k.lo ^= std::uint64_t{1} << i;
        return k;
    }

    friend constexpr auto operator<=>(const Key128&, const Key128&) = default;
};

/// Per-round 32-bit subkey, tagged with its 1-based round number.
struct RoundKey32 {
    HalfWord32 bits = 0;
    int round_index = 0;

    friend constexpr bool operator==(const RoundKey32&, const RoundKey32&) = default;
};

constexpr HalfWord32 rotl32(HalfWord32 w, unsigned n) noexcept {
    n &= 31U;
    return n == 0 ? w : static_cast<HalfWord32>((w << n) | (w >> (32 - n)));
}

constexpr HalfWord32 rotr32(HalfWord32 w, unsigned n) noexcept {
    n &= 31U;
    return n == 0 ? w : static_cast<HalfWord32>((w >> n) | (w << (32 - n)));
}

/// Number of nonzero 4-bit nibbles in a 32-bit word.
constexpr int active_nibbles(HalfWord32 w) noexcept {
    int n = 0;
    for (int i = 0; i < 8; ++i, w >>= 4)
        n += (w & 0xFU) != 0;
    return n;
}

// Hex codecs. Input is case-insensitive and may contain spaces (as printed
// in published vector tables); output is lowercase, big-endian.
// Malformed input throws std::invalid_argument.
Block64 parse_block_hex(std::string_view text);
Key128 parse_key_hex(std::string_view text);
std::string to_hex(Block64 b);
std::string to_hex(Key128 k);
std::string to_hex32(HalfWord32 w);

}  // namespace lici2
