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

#include "lici2/sbox.hpp"

#include <stdexcept>

namespace lici2 {

namespace {

constexpr SBox4::Table invert(const SBox4::Table& t) {
    SBox4::Table inv{};
    for (int x = 0; x < 16; ++x)
        inv[t[x]] = static_cast<Nibble>(x);
    return inv;
}

constexpr SBox4::Table kInverseTable = invert(kCanonicalSBoxTable);

// Byte-wide tables: both nibbles of a byte substituted in one lookup.
constexpr std::array<std::uint8_t, 256> byte_table(const SBox4::Table& t) {
    std::array<std::uint8_t, 256> out{};
    for (int b = 0; b < 256; ++b)
        out[b] = static_cast<std::uint8_t>((t[b >> 4] << 4) | t[b & 0xF]);
    return out;
}

constexpr auto kForwardBytes = byte_table(kCanonicalSBoxTable);
constexpr auto kInverseBytes = byte_table(kInverseTable);

HalfWord32 apply_bytes(const std::array<std::uint8_t, 256>& t, HalfWord32 w) noexcept {
    return static_cast<HalfWord32>(t[w & 0xFF]) | static_cast<HalfWord32>(t[(w >> 8) & 0xFF]) << 8 |
           static_cast<HalfWord32>(t[(w >> 16) & 0xFF]) << 16 |
           static_cast<HalfWord32>(t[w >> 24]) << 24;
}

}  // namespace

SBox4::SBox4(const Table& table) : table_(table) {
    for (Nibble v : table_)
        if (v > 0xF)
            throw std::invalid_argument("S-box entry out of range");
}

const SBox4& SBox4::canonical() {
    static const SBox4 s(kCanonicalSBoxTable);
    return s;
}

bool SBox4::is_permutation() const noexcept {
    unsigned seen = 0;
    for (Nibble v : table_)
        seen |= 1U << v;
    return seen == 0xFFFFU;
}

SBox4 SBox4::inverse() const {
    if (!is_permutation())
        throw std::invalid_argument("S-box is not a permutation; no inverse exists");
    return SBox4(invert(table_));
}

Nibble inv_sbox_lookup(const SBox4& s, Nibble y) { return s.inverse()(y); }

HalfWord32 sub_nibbles(HalfWord32 w) noexcept { return apply_bytes(kForwardBytes, w); }
HalfWord32 inv_sub_nibbles(HalfWord32 w) noexcept { return apply_bytes(kInverseBytes, w); }

HalfWord32 sub_nibbles(const SBox4& s, HalfWord32 w) noexcept {
    HalfWord32 out = 0;
    for (int i = 0; i < 8; ++i)
        out |= static_cast<HalfWord32>(s((w >> (4 * i)) & 0xF)) << (4 * i);
    return out;
}

}  // namespace lici2
