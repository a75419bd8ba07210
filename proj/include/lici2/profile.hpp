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
#include <compare>
#include <string>
#include <string_view>

namespace lici2 {

/// Which 32-bit half of the input block is fed to F1.
enum class FHalf { msb_half, lsb_half };
/// Order in which the final (left, right) halves are concatenated.
enum class OutputOrder { left_then_right, right_then_left };
/// Which 32-bit window of the 128-bit key register becomes the round key.
enum class RoundKeyWindow { k127_96, k95_64, k63_32, k31_0 };
/// Whether a round key is taken after or before that round's register update.
enum class RoundKeyTiming { update_then_extract, extract_then_update };

/// Resolves every cipher convention the published description leaves open.
/// Every cipher entry point takes one explicitly.
///
/// Compact form is five slash-separated tokens, e.g. "msb/LR/w127/upd/rc1":
///   f_half       msb | lsb
///   output_order LR  | RL
///   rk_window    w127 | w95 | w63 | w31
///   rk_timing    upd | ext
///   rc_start     rc1 | rc0
struct ConventionProfile {
    FHalf f_half = FHalf::msb_half;
    OutputOrder output_order = OutputOrder::left_then_right;
    RoundKeyWindow rk_window = RoundKeyWindow::k127_96;
    RoundKeyTiming rk_timing = RoundKeyTiming::update_then_extract;
    int rc_start = 1;

    static constexpr ConventionProfile default_profile() noexcept { return {}; }

    /// The unique profile under which both published test vectors reproduce
    /// (msb/LR/w31/ext/rc0), as established by kat_grid_search.
    static constexpr ConventionProfile verified() noexcept {
        return {FHalf::msb_half, OutputOrder::left_then_right, RoundKeyWindow::k31_0,
                RoundKeyTiming::extract_then_update, 0};
    }

    /// Accepts the compact form or the names "default" and "verified".
    /// Throws std::invalid_argument on a malformed string.
    static ConventionProfile parse(std::string_view text);
    std::string to_string() const;

    friend constexpr auto operator<=>(const ConventionProfile&, const ConventionProfile&) = default;
};

inline constexpr std::size_t kProfileCount = 2 * 2 * 4 * 2 * 2;

/// All 64 profiles in grid-search order. Each field varies from its default
/// value first, with rc_start varying fastest and f_half slowest, so index 0
/// is the default profile.
const std::array<ConventionProfile, kProfileCount>& all_profiles();

}  // namespace lici2
