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

// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "kernels.hpp"

namespace lici2::simd {

namespace {

struct Tables {
    __m256i fwd_lo, fwd_hi, inv_lo, inv_hi, low_mask;
};

Tables make_tables() noexcept {
    alignas(32) std::uint8_t f_lo[32], f_hi[32], i_lo[32], i_hi[32];
    std::uint8_t inv[16];
    for (int x = 0; x < 16; ++x)
        inv[kCanonicalSBoxTable[x]] = static_cast<std::uint8_t>(x);
    for (int i = 0; i < 32; ++i) {
        f_lo[i] = kCanonicalSBoxTable[i & 15];
        f_hi[i] = static_cast<std::uint8_t>(kCanonicalSBoxTable[i & 15] << 4);
        i_lo[i] = inv[i & 15];
        i_hi[i] = static_cast<std::uint8_t>(inv[i & 15] << 4);
    }
    auto load = [](const std::uint8_t* p) {
        return _mm256_load_si256(reinterpret_cast<const __m256i*>(p));
    };
    return {load(f_lo), load(f_hi), load(i_lo), load(i_hi), _mm256_set1_epi8(0x0F)};
}

inline __m256i substitute(__m256i x, __m256i tlo, __m256i thi, __m256i mask) noexcept {
    const __m256i lo = _mm256_and_si256(x, mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), mask);
    return _mm256_or_si256(_mm256_shuffle_epi8(tlo, lo), _mm256_shuffle_epi8(thi, hi));
}

inline __m256i rotl(__m256i x, int n) noexcept {
    return _mm256_or_si256(_mm256_slli_epi32(x, n), _mm256_srli_epi32(x, 32 - n));
}

inline __m256i rotr(__m256i x, int n) noexcept {
    return _mm256_or_si256(_mm256_srli_epi32(x, n), _mm256_slli_epi32(x, 32 - n));
}

// 8 consecutive blocks -> (hi words, lo words), lane i = block i.
inline void load8(const Block64* p, __m256i& hi, __m256i& lo) noexcept {
    const __m256i gather = _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7);
    const __m256i a = _mm256_permutevar8x32_epi32(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)), gather);
    const __m256i b = _mm256_permutevar8x32_epi32(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + 4)), gather);
    lo = _mm256_permute2x128_si256(a, b, 0x20);
    hi = _mm256_permute2x128_si256(a, b, 0x31);
}

inline void store8(Block64* p, __m256i hi, __m256i lo) noexcept {
    const __m256i scatter = _mm256_setr_epi32(0, 4, 1, 5, 2, 6, 3, 7);
    const __m256i a = _mm256_permutevar8x32_epi32(_mm256_permute2x128_si256(lo, hi, 0x20), scatter);
    const __m256i b = _mm256_permutevar8x32_epi32(_mm256_permute2x128_si256(lo, hi, 0x31), scatter);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), a);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + 4), b);
}

}  // namespace

void encrypt_avx2(const Block64* in, Block64* out, std::size_t n, const HalfWord32* rk,
                  int rounds, const ConventionProfile& profile) noexcept {
    static_assert(sizeof(Block64) == 8);
    const Tables t = make_tables();
    const bool f_msb = profile.f_half == FHalf::msb_half;
    const bool lr = profile.output_order == OutputOrder::left_then_right;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i hi, lo;
        load8(in + i, hi, lo);
        __m256i l = f_msb ? hi : lo;
        __m256i r = f_msb ? lo : hi;
        for (int j = 0; j < rounds; ++j) {
            const __m256i p2 = rotl(substitute(l, t.fwd_lo, t.fwd_hi, t.low_mask), kF1Rotation);
            const __m256i p3 =
                _mm256_xor_si256(_mm256_xor_si256(p2, r), _mm256_set1_epi32(static_cast<int>(rk[j])));
            r = _mm256_xor_si256(p3, p2);
            l = p3;
        }
        store8(out + i, lr ? l : r, lr ? r : l);
    }
    encrypt_scalar(in + i, out + i, n - i, rk, rounds, profile);
}

void decrypt_avx2(const Block64* in, Block64* out, std::size_t n, const HalfWord32* rk,
                  int rounds, const ConventionProfile& profile) noexcept {
    const Tables t = make_tables();
    const bool f_msb = profile.f_half == FHalf::msb_half;
    const bool lr = profile.output_order == OutputOrder::left_then_right;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i hi, lo;
        load8(in + i, hi, lo);
        __m256i l = lr ? hi : lo;
        __m256i r = lr ? lo : hi;
        for (int j = rounds - 1; j >= 0; --j) {
            const __m256i tw = _mm256_xor_si256(l, r);
            const __m256i k = _mm256_set1_epi32(static_cast<int>(rk[j]));
            r = _mm256_xor_si256(_mm256_xor_si256(l, tw), k);
            l = substitute(rotr(tw, kF1Rotation), t.inv_lo, t.inv_hi, t.low_mask);
        }
        store8(out + i, f_msb ? l : r, f_msb ? r : l);
    }
    decrypt_scalar(in + i, out + i, n - i, rk, rounds, profile);
}

}  // namespace lici2::simd
