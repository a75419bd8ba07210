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
#include <optional>

#include "lici2/block.hpp"

namespace lici2 {

using Nibble = std::uint8_t;

/// A 4-bit to 4-bit substitution table.
class SBox4 {
public:
    using Table = std::array<Nibble, 16>;

    /// Throws std::invalid_argument if any entry is outside [0, 15].
    explicit SBox4(const Table& table);

    /// The cipher's S-box.
    static const SBox4& canonical();

    Nibble operator()(Nibble x) const noexcept { return table_[x & 0xFU]; }
    const Table& table() const noexcept { return table_; }
    bool is_permutation() const noexcept;

    /// Throws std::invalid_argument when the table is not bijective.
    SBox4 inverse() const;

private:
    Table table_;
};

inline constexpr SBox4::Table kCanonicalSBoxTable = {0x3, 0xF, 0xE, 0x1, 0x0, 0xA, 0x5, 0x8,
                                                     0xC, 0x4, 0xB, 0x2, 0x9, 0x7, 0x6, 0xD};

inline Nibble sbox_lookup(const SBox4& s, Nibble x) noexcept { return s(x); }
Nibble inv_sbox_lookup(const SBox4& s, Nibble y);

/// Applies the canonical S-box to each of the eight nibbles of `w`.
HalfWord32 sub_nibbles(HalfWord32 w) noexcept;
HalfWord32 inv_sub_nibbles(HalfWord32 w) noexcept;

/// Same, for an arbitrary table.
HalfWord32 sub_nibbles(const SBox4& s, HalfWord32 w) noexcept;

}  // namespace lici2
