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
#include <span>
#include <vector>

#include "lici2/cipher.hpp"

namespace lici2::datagram {

// Demonstration modes of operation. These are illustrative constructions
// for a constrained-link payload, not a vetted AEAD.

using Bytes = std::vector<std::uint8_t>;

/// Link keys. The MAC key is the encryption key with every byte XORed with 0x5C.
struct LinkKeys {
    Key128 enc_key;
    Key128 mac_key;

    static LinkKeys derive(Key128 enc_key) noexcept;
};

inline constexpr std::uint64_t kMacKeyMask = 0x5C5C5C5C5C5C5C5CULL;

/// Block j is E_k(nonce || j) with the counter big-endian in the low 32 bits.
/// Blocks are emitted big-endian. Throws std::length_error beyond 2^32 blocks.
Bytes ctr_keystream(Key128 key, std::uint32_t nonce, std::size_t nblocks,
                    const ConventionProfile& profile);

/// XOR with the keystream truncated to the input length; its own inverse.
Bytes ctr_encrypt(std::span<const std::uint8_t> data, Key128 key, std::uint32_t nonce,
                  const ConventionProfile& profile);
inline Bytes ctr_decrypt(std::span<const std::uint8_t> data, Key128 key, std::uint32_t nonce,
                         const ConventionProfile& profile) {
    return ctr_encrypt(data, key, nonce, profile);
}

/// CBC-MAC with zero IV over data padded with 0x80 then zeros to a multiple
/// of 8 bytes (always at least one pad byte). Returns the final block.
std::uint64_t cbc_mac_tag(std::span<const std::uint8_t> data, Key128 mac_key,
                          const ConventionProfile& profile);

}  // namespace lici2::datagram
