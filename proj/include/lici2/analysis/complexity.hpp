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

#include <compare>

namespace lici2::analysis {

/// An exact power of two, 2^exponent. Biases and probabilities are carried
/// this way so values like 2^-80 never touch floating point.
struct Log2 {
    int exponent = 0;
    friend constexpr auto operator<=>(const Log2&, const Log2&) = default;
};

/// Piling-up lemma with n equal biases 2^b: 2^(n-1) * (2^b)^n.
/// Throws std::invalid_argument when n_active < 1.
Log2 piling_up_bias(int n_active, int per_box_bias_log2);

/// N_L = 1 / eps^2. Throws std::invalid_argument unless bias_log2 < 0.
Log2 linear_attack_complexity(Log2 bias);

/// p_d = (2^-2)^n and N_d = 1 / p_d.
Log2 differential_probability(int n_active, int per_box_prob_log2 = -2);
Log2 differential_attack_complexity(int n_active, int per_box_prob_log2 = -2);

/// An attack needing more than the 2^64 codebook is infeasible.
constexpr bool exceeds_codebook(Log2 data, int block_bits = 64) noexcept {
    return data.exponent > block_bits;
}

struct LinearEstimate {
    int active_per_segment = 0;
    int segments = 1;           // the "multiplier" composing identical segments
    Log2 segment_bias;          // piling-up over one segment
    Log2 total_bias;            // piling-up over all segments
    Log2 data_complexity;       // N_L
    bool approximated = false;  // true when segments > 1: extrapolated, not searched
    bool secure_vs_codebook = false;
};

/// Linear estimate for `segments` copies of a segment with `active` S-boxes
/// of bias 2^per_box each. segments = 4 with active = 13 reproduces the
/// 20-round figure (2^-53, 2^106).
LinearEstimate linear_estimate(int active, int segments = 1, int per_box_bias_log2 = -2);

struct DifferentialEstimate {
    int active = 0;
    Log2 probability;
    Log2 data_complexity;
    bool secure_vs_codebook = false;
};

DifferentialEstimate differential_estimate(int active, int per_box_prob_log2 = -2);

}  // namespace lici2::analysis
