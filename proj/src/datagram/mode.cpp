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

#include "lici2/datagram/mode.hpp"

#include <stdexcept>

#include "lici2/batch.hpp"

namespace lici2::datagram {

LinkKeys LinkKeys::derive(Key128 enc_key) noexcept {
    return LinkKeys{enc_key, Key128{enc_key.hi ^ kMacKeyMask, enc_key.lo ^ kMacKeyMask}};
}

namespace {

void put_be64(std::uint8_t* p, std::uint64_t v) noexcept {
    for (int i = 7; i >= 0; --i, v >>= 8)
        p[i] = static_cast<std::uint8_t>(v);
}

}  // namespace

Bytes ctr_keystream(Key128 key, std::uint32_t nonce, std::size_t nblocks,
                    const ConventionProfile& profile) {
    if (nblocks > (std::size_t{1} << 32))
        throw std::length_error("CTR counter space is 2^32 blocks per nonce");
    std::vector<Block64> counters(nblocks);
    for (std::size_t j = 0; j < nblocks; ++j)
        counters[j] = Block64{(static_cast<std::uint64_t>(nonce) << 32) | static_cast<std::uint32_t>(j)};
    encrypt_blocks(counters, counters, key_schedule(key, profile), profile);
    Bytes out(nblocks * 8);
    for (std::size_t j = 0; j < nblocks; ++j)
        put_be64(out.data() + 8 * j, counters[j].bits);
    return out;
}

Bytes ctr_encrypt(std::span<const std::uint8_t> data, Key128 key, std::uint32_t nonce,
                  const ConventionProfile& profile) {
    const Bytes ks = ctr_keystream(key, nonce, (data.size() + 7) / 8, profile);
    Bytes out(data.begin(), data.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] ^= ks[i];
    return out;
}

std::uint64_t cbc_mac_tag(std::span<const std::uint8_t> data, Key128 mac_key,
                          const ConventionProfile& profile) {
    const RoundKeys rk = key_schedule(mac_key, profile);
    Bytes padded(data.begin(), data.end());
    padded.push_back(0x80);
    while (padded.size() % 8 != 0)
        padded.push_back(0x00);
    std::uint64_t state = 0;
    for (std::size_t off = 0; off < padded.size(); off += 8) {
        std::uint64_t m = 0;
        for (int i = 0; i < 8; ++i)
            m = (m << 8) | padded[off + i];
        state = encrypt_with_schedule(Block64{state ^ m}, rk, profile).bits;
    }
    return state;
}

}  // namespace lici2::datagram
