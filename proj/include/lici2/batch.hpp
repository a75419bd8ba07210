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

#include <span>
#include <string_view>
#include <vector>

#include "lici2/cipher.hpp"

namespace lici2 {

/// Batch kernels encrypting many blocks under one round-key schedule.
/// `scalar` is the reference; `avx2` processes 8 blocks per step using
/// byte shuffles for the nibble S-box.
enum class Kernel { scalar, avx2 };

std::string_view kernel_name(Kernel k) noexcept;

/// Whether the CPU running this process can execute the kernel.
bool kernel_supported(Kernel k) noexcept;

/// The widest supported kernel. Setting LICI2_KERNEL=scalar in the
/// environment forces the reference path.
Kernel best_kernel() noexcept;

/// Kernels available on this machine, reference first.
std::vector<Kernel> supported_kernels();

/// in and out must have equal length; they may alias exactly.
/// Throws std::invalid_argument on a size mismatch or an unsupported kernel.
void encrypt_blocks(std::span<const Block64> in, std::span<Block64> out, const RoundKeys& rk,
                    const ConventionProfile& profile, Kernel kernel = best_kernel(),
                    int rounds = kRounds);
void decrypt_blocks(std::span<const Block64> in, std::span<Block64> out, const RoundKeys& rk,
                    const ConventionProfile& profile, Kernel kernel = best_kernel(),
                    int rounds = kRounds);

}  // namespace lici2
