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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels.hpp"
#include "lici2/batch.hpp"

namespace lici2 {

std::string_view kernel_name(Kernel k) noexcept {
    switch (k) {
    case Kernel::scalar: return "scalar";
    case Kernel::avx2: return "avx2";
    }
    return "unknown";
}

bool kernel_supported(Kernel k) noexcept {
    switch (k) {
    case Kernel::scalar: return true;
    case Kernel::avx2:
#if defined(LICI2_HAVE_AVX2_KERNEL)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Kernel best_kernel() noexcept {
    static const Kernel k = [] {
        const char* env = std::getenv("LICI2_KERNEL");
        if (env && std::string(env) == "scalar")
            return Kernel::scalar;
        return kernel_supported(Kernel::avx2) ? Kernel::avx2 : Kernel::scalar;
    }();
    return k;
}

std::vector<Kernel> supported_kernels() {
    std::vector<Kernel> ks{Kernel::scalar};
    if (kernel_supported(Kernel::avx2))
        ks.push_back(Kernel::avx2);
    return ks;
}

namespace {

void check(std::span<const Block64> in, std::span<Block64> out, Kernel kernel, int rounds) {
    if (in.size() != out.size())
        throw std::invalid_argument("batch input and output sizes differ");
    if (!kernel_supported(kernel))
        throw std::invalid_argument("kernel '" + std::string(kernel_name(kernel)) +
                                    "' is not supported on this CPU");
    if (rounds < 0 || rounds > kRounds)
        throw std::invalid_argument("rounds must be in [0, 25]");
}

std::array<HalfWord32, kRounds> raw_keys(const RoundKeys& rk) {
    std::array<HalfWord32, kRounds> k{};
    for (int i = 0; i < kRounds; ++i)
        k[i] = rk[i].bits;
    return k;
}

}  // namespace

void encrypt_blocks(std::span<const Block64> in, std::span<Block64> out, const RoundKeys& rk,
                    const ConventionProfile& profile, Kernel kernel, int rounds) {
    check(in, out, kernel, rounds);
    const auto k = raw_keys(rk);
#if defined(LICI2_HAVE_AVX2_KERNEL)
    if (kernel == Kernel::avx2) {
        simd::encrypt_avx2(in.data(), out.data(), in.size(), k.data(), rounds, profile);
        return;
    }
#endif
    simd::encrypt_scalar(in.data(), out.data(), in.size(), k.data(), rounds, profile);
}

void decrypt_blocks(std::span<const Block64> in, std::span<Block64> out, const RoundKeys& rk,
                    const ConventionProfile& profile, Kernel kernel, int rounds) {
    check(in, out, kernel, rounds);
    const auto k = raw_keys(rk);
#if defined(LICI2_HAVE_AVX2_KERNEL)
    if (kernel == Kernel::avx2) {
        simd::decrypt_avx2(in.data(), out.data(), in.size(), k.data(), rounds, profile);
        return;
    }
#endif
    simd::decrypt_scalar(in.data(), out.data(), in.size(), k.data(), rounds, profile);
}

}  // namespace lici2
