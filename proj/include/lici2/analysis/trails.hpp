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

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lici2/block.hpp"
#include "lici2/profile.hpp"

namespace lici2::analysis {

enum class TrailType { linear, differential };
enum class SearchMode { exact_bitlevel, truncated_nibble };

std::string_view to_string(TrailType t) noexcept;
std::string_view to_string(SearchMode m) noexcept;

inline constexpr int kMaxExactRounds = 8;
inline constexpr int kMaxTruncatedRounds = 25;

/// One round of a bit-level trail, in (F-half, XOR-half) coordinates.
///
/// Differential: `left`/`right` are the input differences of the round and
/// `sbox_out` the S-layer output difference; next left = rotl(sbox_out, 11) ^ right,
/// next right = right (round-key differences vanish).
///
/// Linear: `left`/`right` are the input masks and `sbox_out` the S-layer
/// output mask; next left = rotl(sbox_out, 11), next right = right ^ next left.
struct TrailRound {
    HalfWord32 left = 0;
    HalfWord32 right = 0;
    HalfWord32 sbox_out = 0;
    int active = 0;
};

enum class SearchStatus {
    exact,       // min_active is the true minimum
    bound_only,  // deadline hit; min_active is a proven lower bound only
};

struct TrailResult {
    int rounds = 0;
    TrailType trail_type = TrailType::differential;
    SearchMode mode = SearchMode::exact_bitlevel;
    SearchStatus status = SearchStatus::exact;
    int min_active = 0;
    std::vector<TrailRound> witness;  // exact mode only, one entry per round
    HalfWord32 final_left = 0;        // state after the last round
    HalfWord32 final_right = 0;
    std::uint64_t nodes = 0;          // search-tree nodes visited
    double seconds = 0.0;
};

struct SearchOptions {
    /// Zero means no deadline.
    std::chrono::milliseconds time_budget{0};
};

/// Minimum number of active S-boxes over all nonzero trails of `rounds`
/// rounds. Exact mode: 1..8 rounds; truncated mode: 1..25.
/// The profile only relabels halves and keys, neither of which changes
/// active-S-box counts, so results are profile independent.
/// Throws std::invalid_argument for out-of-range rounds.
TrailResult min_active_sboxes(int rounds, TrailType type, SearchMode mode,
                              const ConventionProfile& profile = ConventionProfile::verified(),
                              const SearchOptions& options = {});

/// Published minimum counts (rounds 1..5), for side-by-side reporting.
std::optional<int> published_min_active(TrailType type, int rounds) noexcept;

/// Re-checks a bit-level witness: every S-box transition must have a
/// nonzero DDT/LAT entry, the propagation equations must chain, and the
/// active count must equal min_active. Differential witnesses are
/// additionally replayed on concrete value pairs through round_forward.
/// Returns an empty string on success, otherwise the first failure.
std::string verify_witness(const TrailResult& result);

}  // namespace lici2::analysis
