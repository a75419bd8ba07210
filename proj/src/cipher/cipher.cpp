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

#include "lici2/cipher.hpp"

#include <stdexcept>
#include <tuple>

namespace lici2 {

std::pair<HalfWord32, HalfWord32> round_forward(HalfWord32 l, HalfWord32 r, HalfWord32 k) noexcept {
    const HalfWord32 p2 = rotl32(sub_nibbles(l), kF1Rotation);
    const HalfWord32 p3 = p2 ^ r ^ k;
    const HalfWord32 p4 = p3 ^ p2;
    return {p3, p4};
}

std::pair<HalfWord32, HalfWord32> round_inverse(HalfWord32 l2, HalfWord32 r2, HalfWord32 k) noexcept {
    const HalfWord32 t = l2 ^ r2;
    return {inv_sub_nibbles(rotr32(t, kF1Rotation)), l2 ^ t ^ k};
}

void KeyState::update(int round_counter) noexcept {
    // 128-bit rotate left by 13.
    const std::uint64_t hi = (key_.hi << kKeyRotation) | (key_.lo >> (64 - kKeyRotation));
    const std::uint64_t lo = (key_.lo << kKeyRotation) | (key_.hi >> (64 - kKeyRotation));
    key_.hi = hi;
    key_.lo = lo;
    const auto& s = kCanonicalSBoxTable;
    const std::uint64_t n0 = s[key_.lo & 0xF];
    const std::uint64_t n1 = s[(key_.lo >> 4) & 0xF];
    key_.lo = (key_.lo & ~std::uint64_t{0xFF}) | (n1 << 4) | n0;
    key_.lo ^= (static_cast<std::uint64_t>(round_counter) & 0x1F) << 59;
}

HalfWord32 KeyState::window(RoundKeyWindow w) const noexcept {
    switch (w) {
    case RoundKeyWindow::k127_96: return static_cast<HalfWord32>(key_.hi >> 32);
    case RoundKeyWindow::k95_64: return static_cast<HalfWord32>(key_.hi);
    case RoundKeyWindow::k63_32: return static_cast<HalfWord32>(key_.lo >> 32);
    case RoundKeyWindow::k31_0: return static_cast<HalfWord32>(key_.lo);
    }
    return 0;
}

RoundKeys key_schedule(Key128 k, const ConventionProfile& profile) noexcept {
    RoundKeys out{};
    KeyState state(k);
    for (int i = 1; i <= kRounds; ++i) {
        const int rc = profile.rc_start + i - 1;
        if (profile.rk_timing == RoundKeyTiming::update_then_extract) {
            state.update(rc);
            out[i - 1] = {state.window(profile.rk_window), i};
        } else {
            out[i - 1] = {state.window(profile.rk_window), i};
            state.update(rc);
        }
    }
    return out;
}

std::pair<HalfWord32, HalfWord32> split_block(Block64 b, const ConventionProfile& profile) noexcept {
    if (profile.f_half == FHalf::msb_half)
        return {b.hi(), b.lo()};
    return {b.lo(), b.hi()};
}

Block64 unsplit_block(HalfWord32 l, HalfWord32 r, const ConventionProfile& profile) noexcept {
    return profile.f_half == FHalf::msb_half ? Block64::join(l, r) : Block64::join(r, l);
}

Block64 join_block(HalfWord32 l, HalfWord32 r, const ConventionProfile& profile) noexcept {
    return profile.output_order == OutputOrder::left_then_right ? Block64::join(l, r)
                                                                : Block64::join(r, l);
}

std::pair<HalfWord32, HalfWord32> unjoin_block(Block64 c, const ConventionProfile& profile) noexcept {
    if (profile.output_order == OutputOrder::left_then_right)
        return {c.hi(), c.lo()};
    return {c.lo(), c.hi()};
}

Block64 encrypt_with_schedule(Block64 p, const RoundKeys& rk, const ConventionProfile& profile,
                              int rounds) noexcept {
    auto [l, r] = split_block(p, profile);
    for (int i = 0; i < rounds; ++i)
        std::tie(l, r) = round_forward(l, r, rk[i].bits);
    return join_block(l, r, profile);
}

Block64 decrypt_with_schedule(Block64 c, const RoundKeys& rk, const ConventionProfile& profile,
                              int rounds) noexcept {
    auto [l, r] = unjoin_block(c, profile);
    for (int i = rounds - 1; i >= 0; --i)
        std::tie(l, r) = round_inverse(l, r, rk[i].bits);
    return unsplit_block(l, r, profile);
}

Block64 encrypt_block(Block64 p, Key128 k, const ConventionProfile& profile) noexcept {
    return encrypt_with_schedule(p, key_schedule(k, profile), profile);
}

Block64 decrypt_block(Block64 c, Key128 k, const ConventionProfile& profile) noexcept {
    return decrypt_with_schedule(c, key_schedule(k, profile), profile);
}

const std::array<KnownAnswer, 2>& published_vectors() {
    static const std::array<KnownAnswer, 2> v = {
        KnownAnswer{parse_block_hex("12345678 90abcdef"),
                    parse_key_hex("12345678 90abcdef 12345678 90abcdef"),
                    parse_block_hex("1339607b 88df737a")},
        KnownAnswer{parse_block_hex("FFFFFFFF FFFFFFFF"),
                    parse_key_hex("00000000 00000000 00000000 00000000"),
                    parse_block_hex("c7ac349c ecb57df3")},
    };
    return v;
}

KatSearchResult kat_grid_search(std::span<const KnownAnswer> vectors) {
    if (vectors.empty())
        throw std::invalid_argument("kat_grid_search needs at least one vector");
    KatSearchResult result;
    result.rows.reserve(kProfileCount);
    for (const ConventionProfile& prof : all_profiles()) {
        ProfileVerdict row{prof, {}, {}, true};
        for (const KnownAnswer& v : vectors) {
            const Block64 c = encrypt_block(v.plaintext, v.key, prof);
            row.produced.push_back(c);
            row.matched.push_back(c == v.ciphertext);
            row.all_matched = row.all_matched && c == v.ciphertext;
        }
        if (row.all_matched) {
            ++result.matching_profiles;
            if (!result.match)
                result.match = prof;
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace lici2
