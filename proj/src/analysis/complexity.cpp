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

#include "lici2/analysis/complexity.hpp"

#include <stdexcept>

namespace lici2::analysis {

Log2 piling_up_bias(int n_active, int per_box_bias_log2) {
    if (n_active < 1)
        throw std::invalid_argument("piling-up needs at least one approximation");
    return Log2{(n_active - 1) + n_active * per_box_bias_log2};
}

Log2 linear_attack_complexity(Log2 bias) {
    if (bias.exponent >= 0)
        throw std::invalid_argument("bias must be below 2^0");
    return Log2{-2 * bias.exponent};
}

Log2 differential_probability(int n_active, int per_box_prob_log2) {
    if (n_active < 1)
        throw std::invalid_argument("differential estimate needs at least one active S-box");
    return Log2{n_active * per_box_prob_log2};
}

Log2 differential_attack_complexity(int n_active, int per_box_prob_log2) {
    // N_d = C / p_d with C = 1.
    return Log2{-differential_probability(n_active, per_box_prob_log2).exponent};
}

LinearEstimate linear_estimate(int active, int segments, int per_box_bias_log2) {
    if (segments < 1)
        throw std::invalid_argument("segments must be >= 1");
    LinearEstimate e;
    e.active_per_segment = active;
    e.segments = segments;
    e.segment_bias = piling_up_bias(active, per_box_bias_log2);
    e.total_bias = segments == 1 ? e.segment_bias : piling_up_bias(segments, e.segment_bias.exponent);
    e.data_complexity = linear_attack_complexity(e.total_bias);
    e.approximated = segments > 1;
    e.secure_vs_codebook = exceeds_codebook(e.data_complexity);
    return e;
}

DifferentialEstimate differential_estimate(int active, int per_box_prob_log2) {
    DifferentialEstimate e;
    e.active = active;
    e.probability = differential_probability(active, per_box_prob_log2);
    e.data_complexity = differential_attack_complexity(active, per_box_prob_log2);
    e.secure_vs_codebook = exceeds_codebook(e.data_complexity);
    return e;
}

}  // namespace lici2::analysis
