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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bitset>
#include <set>

#include "lici2/cipher.hpp"
#include "lici2/rng.hpp"

using namespace lici2;

namespace {

// Bit-vector model of the key register; bit i of the bitset is key bit k_i.
struct BitKey {
    std::bitset<128> b;

    explicit BitKey(Key128 k) {
        for (unsigned i = 0; i < 128; ++i)
            b[i] = k.bit(i);
    }
    void update(int rc) {
        std::bitset<128> r;
        for (unsigned i = 0; i < 128; ++i)
            r[(i + 13) % 128] = b[i];
        b = r;
        for (unsigned n = 0; n < 2; ++n) {
            unsigned v = 0;
            for (unsigned j = 0; j < 4; ++j)
                v |= unsigned(b[4 * n + j]) << j;
            const unsigned s = kCanonicalSBoxTable[v];
            for (unsigned j = 0; j < 4; ++j)
                b[4 * n + j] = (s >> j) & 1;
        }
        for (unsigned j = 0; j < 5; ++j)
            b[59 + j] = b[59 + j] ^ bool((rc >> j) & 1);
    }
    std::uint32_t window(unsigned top) const {
        std::uint32_t w = 0;
        for (unsigned j = 0; j < 32; ++j)
            w |= std::uint32_t(b[top - 31 + j]) << j;
        return w;
    }
    std::set<unsigned> set_bits() const {
        std::set<unsigned> s;
        for (unsigned i = 0; i < 128; ++i)
            if (b[i])
                s.insert(i);
        return s;
    }
};

unsigned window_top(RoundKeyWindow w) {
    switch (w) {
    case RoundKeyWindow::k127_96: return 127;
    case RoundKeyWindow::k95_64: return 95;
    case RoundKeyWindow::k63_32: return 63;
    case RoundKeyWindow::k31_0: return 31;
    }
    return 0;
}

std::uint32_t rotl_bits(std::uint32_t w, unsigned n) {
    std::uint32_t out = 0;
    for (unsigned i = 0; i < 32; ++i)
        if ((w >> i) & 1)
            out |= 1U << ((i + n) % 32);
    return out;
}

}  // namespace

TEST_CASE("sbox table") {
    const SBox4& s = SBox4::canonical();
    CHECK(s(0x0) == 0x3);
    CHECK(s(0x4) == 0x0);
    CHECK(s(0xF) == 0xD);
    CHECK(s.is_permutation());
    CHECK(inv_sbox_lookup(s, 0x3) == 0x0);
    CHECK(inv_sbox_lookup(s, 0x0) == 0x4);
    for (unsigned y = 0; y < 16; ++y) {
        CHECK(s(inv_sbox_lookup(s, Nibble(y))) == y);
        CHECK(inv_sbox_lookup(s, s(Nibble(y))) == y);
    }
    SBox4::Table broken = kCanonicalSBoxTable;
    broken[1] = broken[0];
    CHECK_THROWS_AS(SBox4{broken}.inverse(), std::invalid_argument);
}

TEST_CASE("sub_nibbles") {
    CHECK(sub_nibbles(0x00000000U) == 0x33333333U);
    CHECK(sub_nibbles(0xFFFFFFFFU) == 0xDDDDDDDDU);
    // Nibbles 0,1,2,3,4,5,6,7 map to 3,F,E,1,0,A,5,8.
    CHECK(sub_nibbles(0x01234567U) == 0x3FE10A58U);
    SeededRng rng(7);
    for (int i = 0; i < 10000; ++i) {
        const std::uint32_t w = rng.next_u32();
        CHECK(inv_sub_nibbles(sub_nibbles(w)) == w);
        std::uint32_t oracle = 0;
        for (int n = 0; n < 8; ++n)
            oracle |= std::uint32_t(kCanonicalSBoxTable[(w >> (4 * n)) & 0xF]) << (4 * n);
        REQUIRE(sub_nibbles(w) == oracle);
    }
}

TEST_CASE("rotations") {
    CHECK(rotl32(0x00000001U, 11) == 0x00000800U);
    CHECK(rotl32(0xDEADBEEFU, 0) == 0xDEADBEEFU);
    CHECK(rotl32(0x33333333U, 11) == 0x99999999U);
    SeededRng rng(3);
    for (int i = 0; i < 2000; ++i) {
        const std::uint32_t w = rng.next_u32();
        const unsigned n = unsigned(rng.below(32));
        CHECK(rotl32(w, n) == rotl_bits(w, n));
        CHECK(rotr32(rotl32(w, n), n) == w);
    }
}

TEST_CASE("f1") {
    static_assert(f1(0) == 0x99999999U);
    CHECK(f1(0xFFFFFFFFU) == 0xEEEEEEEEU);
    CHECK(f1(0xFFFFFFFFU) == rotl32(0xDDDDDDDDU, 11));
    // Bijective: check injectivity on a structured subspace (all values of the low 16 bits).
    std::vector<std::uint32_t> seen;
    for (std::uint32_t x = 0; x < 65536; ++x)
        seen.push_back(f1(x));
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("round function") {
    CHECK(round_forward(0, 0, 0) == std::pair<HalfWord32, HalfWord32>{0x99999999U, 0});
    CHECK(round_forward(0, 0xAAAAAAAAU, 0) == std::pair<HalfWord32, HalfWord32>{0x33333333U, 0xAAAAAAAAU});
    CHECK(round_inverse(0x99999999U, 0, 0) == std::pair<HalfWord32, HalfWord32>{0, 0});
    CHECK(round_inverse(0x5, 0x5, 0) == std::pair<HalfWord32, HalfWord32>{0x44444444U, 0x5});

    SeededRng rng(11);
    for (int i = 0; i < 10000; ++i) {
        const HalfWord32 l = rng.next_u32(), r = rng.next_u32(), k = rng.next_u32();
        const auto [l2, r2] = round_forward(l, r, k);
        REQUIRE(round_inverse(l2, r2, k) == std::pair<HalfWord32, HalfWord32>{l, r});
        // The right branch only sees key material.
        REQUIRE(r2 == (r ^ k));
    }
}

TEST_CASE("key schedule against bit-vector model") {
    const ConventionProfile def = ConventionProfile::default_profile();
    BitKey m(Key128{});
    m.update(1);
    CHECK(m.set_bits() == std::set<unsigned>{0, 1, 4, 5, 59});
    m.update(2);
    CHECK(m.set_bits() == std::set<unsigned>{0, 1, 4, 5, 13, 14, 17, 18, 60, 72});

    const RoundKeys zero = key_schedule(Key128{}, def);
    CHECK(zero.size() == 25);
    CHECK(zero[0].bits == 0);
    CHECK(zero[1].bits == 0);

    SeededRng rng(5);
    for (const ConventionProfile& p : all_profiles()) {
        for (int t = 0; t < 8; ++t) {
            const Key128 k = t == 0 ? Key128{} : rng.key();
            const RoundKeys rk = key_schedule(k, p);
            BitKey model(k);
            for (int i = 1; i <= kRounds; ++i) {
                const int rc = p.rc_start + i - 1;
                std::uint32_t expect;
                if (p.rk_timing == RoundKeyTiming::update_then_extract) {
                    model.update(rc);
                    expect = model.window(window_top(p.rk_window));
                } else {
                    expect = model.window(window_top(p.rk_window));
                    model.update(rc);
                }
                REQUIRE(rk[i - 1].round_index == i);
                REQUIRE(rk[i - 1].bits == expect);
            }
        }
    }
}

TEST_CASE("published vectors under the verified profile") {
    const ConventionProfile v = ConventionProfile::verified();
    CHECK(v.to_string() == "msb/LR/w31/ext/rc0");
    const Key128 k1 = parse_key_hex("1234567890abcdef1234567890abcdef");
    CHECK(encrypt_block(parse_block_hex("1234567890abcdef"), k1, v) == parse_block_hex("1339607b88df737a"));
    CHECK(encrypt_block(parse_block_hex("ffffffffffffffff"), Key128{}, v) == parse_block_hex("c7ac349cecb57df3"));
    CHECK(decrypt_block(parse_block_hex("1339607b88df737a"), k1, v) == parse_block_hex("1234567890abcdef"));
    CHECK(decrypt_block(parse_block_hex("c7ac349cecb57df3"), Key128{}, v) == parse_block_hex("ffffffffffffffff"));
    for (const ConventionProfile& p : all_profiles()) {
        if (p == v)
            continue;
        CHECK(decrypt_block(parse_block_hex("1339607b88df737a"), k1, p) != parse_block_hex("1234567890abcdef"));
    }
}

TEST_CASE("kat grid search") {
    const KatSearchResult res = kat_grid_search(published_vectors());
    CHECK(res.rows.size() == kProfileCount);
    REQUIRE(res.match.has_value());
    CHECK(*res.match == ConventionProfile::verified());
    CHECK(res.matching_profiles == 1);

    const Block64 p{0x0123456789abcdefULL};
    const Key128 k{0x1111, 0x2222};
    const ConventionProfile def = ConventionProfile::default_profile();
    const KnownAnswer self{p, k, encrypt_block(p, k, def)};
    const KatSearchResult own = kat_grid_search(std::span<const KnownAnswer>(&self, 1));
    REQUIRE(own.match.has_value());
    CHECK(*own.match == def);
    CHECK(own.matching_profiles >= 1);

    CHECK_THROWS_AS(kat_grid_search(std::span<const KnownAnswer>{}), std::invalid_argument);
}

TEST_CASE("round trip over every profile") {
    SeededRng rng(2026);
    for (const ConventionProfile& p : all_profiles()) {
        for (int i = 0; i < 500; ++i) {
            const Block64 b = rng.block();
            const Key128 k = rng.key();
            REQUIRE(decrypt_block(encrypt_block(b, k, p), k, p) == b);
        }
        CHECK(decrypt_block(encrypt_block(Block64{}, Key128{}, p), Key128{}, p) == Block64{});
    }
}

TEST_CASE("reduced rounds and schedule variants agree") {
    SeededRng rng(9);
    const ConventionProfile p = ConventionProfile::verified();
    for (int rounds = 0; rounds <= kRounds; ++rounds) {
        const Key128 k = rng.key();
        const Block64 b = rng.block();
        const RoundKeys rk = key_schedule(k, p);
        CHECK(decrypt_with_schedule(encrypt_with_schedule(b, rk, p, rounds), rk, p, rounds) == b);
    }
    const Key128 k = rng.key();
    const Block64 b = rng.block();
    CHECK(encrypt_with_schedule(b, key_schedule(k, p), p) == encrypt_block(b, k, p));
}

TEST_CASE("right half is plaintext xor key material") {
    // r' = r ^ k every round, so C_R = P_R ^ (K_1 ^ ... ^ K_25) under msb/LR.
    SeededRng rng(13);
    const ConventionProfile p = ConventionProfile::verified();
    for (int i = 0; i < 1000; ++i) {
        const Key128 k = rng.key();
        const Block64 b = rng.block();
        HalfWord32 acc = 0;
        for (const RoundKey32& rk : key_schedule(k, p))
            acc ^= rk.bits;
        REQUIRE(encrypt_block(b, k, p).lo() == (b.lo() ^ acc));
    }
}

TEST_CASE("profiles") {
    std::set<std::string> names;
    for (const ConventionProfile& p : all_profiles()) {
        names.insert(p.to_string());
        CHECK(ConventionProfile::parse(p.to_string()) == p);
    }
    CHECK(names.size() == kProfileCount);
    CHECK(all_profiles()[0] == ConventionProfile::default_profile());
    CHECK(ConventionProfile::parse("default") == ConventionProfile::default_profile());
    CHECK(ConventionProfile::parse("verified") == ConventionProfile::verified());
    CHECK_THROWS_AS(ConventionProfile::parse("msb/LR/w12/upd/rc1"), std::invalid_argument);
    CHECK_THROWS_AS(ConventionProfile::parse(""), std::invalid_argument);

    // Distinct profiles give distinct ciphertexts on a fixed input.
    std::set<std::uint64_t> outs;
    for (const ConventionProfile& p : all_profiles())
        outs.insert(encrypt_block(Block64{0x0123456789abcdefULL}, Key128{0xfedcba9876543210ULL, 0x0f1e2d3c4b5a6978ULL}, p).bits);
    CHECK(outs.size() == kProfileCount);
}

TEST_CASE("hex codecs") {
    CHECK(parse_block_hex("0x1234 5678_90ab cdef") == Block64{0x1234567890abcdefULL});
    CHECK(to_hex(Block64{0xc7ac349cecb57df3ULL}) == "c7ac349cecb57df3");
    CHECK(to_hex(Key128{1, 2}) == "00000000000000010000000000000002");
    CHECK(to_hex32(0x99999999U) == "99999999");
    CHECK_THROWS_AS(parse_block_hex("123"), std::invalid_argument);
    CHECK_THROWS_AS(parse_block_hex("zz34567890abcdef"), std::invalid_argument);
    CHECK_THROWS_AS(parse_key_hex("1234567890abcdef"), std::invalid_argument);
    const Key128 k = parse_key_hex("000102030405060708090a0b0c0d0e0f");
    CHECK(parse_key_hex(to_hex(k)) == k);
}
