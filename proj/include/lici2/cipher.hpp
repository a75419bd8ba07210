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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lici2/block.hpp"
#include "lici2/profile.hpp"
#include "lici2/sbox.hpp"

namespace lici2 {

inline constexpr int kRounds = 25;
inline constexpr unsigned kF1Rotation = 11;
inline constexpr unsigned kKeyRotation = 13;

using RoundKeys = std::array<RoundKey32, kRounds>;

/// F1: nibble substitution followed by a left rotation by 11.
constexpr HalfWord32 f1(HalfWord32 l) noexcept;

/// One encryption round as published:
///   t  = F1(l)
///   l' = t ^ r ^ k
///   r' = l' ^ t
/// Note that r' reduces to r ^ k: the S-box output cancels on the right
/// branch. This is implemented literally and pinned by a regression test.
std::pair<HalfWord32, HalfWord32> round_forward(HalfWord32 l, HalfWord32 r, HalfWord32 k) noexcept;

/// Inverse of round_forward under the same round key.
std::pair<HalfWord32, HalfWord32> round_inverse(HalfWord32 l2, HalfWord32 r2, HalfWord32 k) noexcept;

/// The 128-bit rotating key register.
class KeyState {
public:
    explicit KeyState(Key128 k) noexcept : key_(k) {}

    /// rotate left 13, S-box on nibbles 0 and 1, xor 5-bit counter into k63..k59.
    void update(int round_counter) noexcept;
    HalfWord32 window(RoundKeyWindow w) const noexcept;
    Key128 value() const noexcept { return key_; }

private:
    Key128 key_;
};

RoundKeys key_schedule(Key128 k, const ConventionProfile& profile) noexcept;

/// Split a block into (F-half, XOR-half) per profile.f_half.
std::pair<HalfWord32, HalfWord32> split_block(Block64 b, const ConventionProfile& profile) noexcept;
/// Concatenate final halves per profile.output_order.
Block64 join_block(HalfWord32 l, HalfWord32 r, const ConventionProfile& profile) noexcept;
/// Inverses of the two above, used by decryption.
std::pair<HalfWord32, HalfWord32> unjoin_block(Block64 c, const ConventionProfile& profile) noexcept;
Block64 unsplit_block(HalfWord32 l, HalfWord32 r, const ConventionProfile& profile) noexcept;

Block64 encrypt_block(Block64 p, Key128 k, const ConventionProfile& profile) noexcept;
Block64 decrypt_block(Block64 c, Key128 k, const ConventionProfile& profile) noexcept;

/// Schedule-reusing and reduced-round variants. `rounds` must be in [0, 25];
/// the first `rounds` subkeys are used.
Block64 encrypt_with_schedule(Block64 p, const RoundKeys& rk, const ConventionProfile& profile,
                              int rounds = kRounds) noexcept;
Block64 decrypt_with_schedule(Block64 c, const RoundKeys& rk, const ConventionProfile& profile,
                              int rounds = kRounds) noexcept;

struct KnownAnswer {
    Block64 plaintext;
    Key128 key;
    Block64 ciphertext;
};

/// The two published test vectors.
const std::array<KnownAnswer, 2>& published_vectors();

struct ProfileVerdict {
    ConventionProfile profile;
    std::vector<Block64> produced;  // one per vector
    std::vector<bool> matched;
    bool all_matched = false;
};

struct KatSearchResult {
    std::optional<ConventionProfile> match;  // first fully-matching profile in all_profiles() order
    int matching_profiles = 0;
    std::vector<ProfileVerdict> rows;  // all 64, in enumeration order
};

/// Evaluate every convention profile against the vectors.
/// Throws std::invalid_argument on an empty vector list.
KatSearchResult kat_grid_search(std::span<const KnownAnswer> vectors);

// ---- inline definitions ----

constexpr HalfWord32 f1(HalfWord32 l) noexcept {
    HalfWord32 out = 0;
    for (int i = 0; i < 8; ++i)
        out |= static_cast<HalfWord32>(kCanonicalSBoxTable[(l >> (4 * i)) & 0xFU]) << (4 * i);
    return rotl32(out, kF1Rotation);
}

}  // namespace lici2
