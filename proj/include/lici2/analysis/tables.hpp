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
#include <string>

#include "lici2/sbox.hpp"

namespace lici2::analysis {

/// Difference distribution table: counts[din][dout] = #{x : S(x) ^ S(x ^ din) = dout}.
struct DDT {
    std::array<std::array<int, 16>, 16> counts{};

    /// Largest entry over nonzero input differences.
    int max_nontrivial() const noexcept;
    /// Row sums 16, entries even, trivial row is (16, 0, ..., 0).
    bool satisfies_invariants() const noexcept;
};

/// Linear approximation table with the count - 8 offset:
/// entries[a][b] = #{x : a.x == b.S(x)} - 8, so |entry| / 16 is the bias.
struct LAT {
    std::array<std::array<int, 16>, 16> entries{};

    /// Largest |entry| over nonzero (a, b).
    int max_nontrivial_abs() const noexcept;
    bool satisfies_invariants() const noexcept;
};

/// Requires a bijective S-box (std::invalid_argument otherwise).
DDT build_ddt(const SBox4& s);
LAT build_lat(const SBox4& s);

/// Aligned terminal rendering, rows = input difference / mask.
std::string render(const DDT& ddt);
std::string render(const LAT& lat);

}  // namespace lici2::analysis
