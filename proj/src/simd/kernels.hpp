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

#include <cstddef>
#include <cstdint>

#include "lici2/cipher.hpp"

namespace lici2::simd {

// Raw batch kernels. `rk` holds `rounds` subkeys in round order.
// Blocks are processed in place-safe fashion (in may equal out).

void encrypt_scalar(const Block64* in, Block64* out, std::size_t n, const HalfWord32* rk,
                    int rounds, const ConventionProfile& profile) noexcept;
void decrypt_scalar(const Block64* in, Block64* out, std::size_t n, const HalfWord32* rk,
                    int rounds, const ConventionProfile& profile) noexcept;

#if defined(LICI2_HAVE_AVX2_KERNEL)
void encrypt_avx2(const Block64* in, Block64* out, std::size_t n, const HalfWord32* rk,
                  int rounds, const ConventionProfile& profile) noexcept;
void decrypt_avx2(const Block64* in, Block64* out, std::size_t n, const HalfWord32* rk,
                  int rounds, const ConventionProfile& profile) noexcept;
#endif

}  // namespace lici2::simd
