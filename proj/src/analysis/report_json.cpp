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

#include "lici2/analysis/report_json.hpp"

namespace lici2::analysis {

using nlohmann::json;

namespace {

json matrix(const std::array<std::array<int, 16>, 16>& m) {
    json rows = json::array();
    for (const auto& row : m)
        rows.push_back(json(row));
    return rows;
}

json log2_value(Log2 v) { return json{{"log2", v.exponent}}; }

}  // namespace

json to_json(const DDT& ddt) {
    return json{{"kind", "ddt"},
                {"sbox", SBox4::canonical().table()},
                {"counts", matrix(ddt.counts)},
                {"max_nontrivial", ddt.max_nontrivial()},
                {"convention", "counts[din][dout] = #{x : S(x) ^ S(x ^ din) = dout}"}};
}

json to_json(const LAT& lat) {
    return json{{"kind", "lat"},
                {"sbox", SBox4::canonical().table()},
                {"entries", matrix(lat.entries)},
                {"max_nontrivial_abs", lat.max_nontrivial_abs()},
                {"convention", "entries[a][b] = #{x : a.x = b.S(x)} - 8; bias = |entry| / 16"}};
}

json to_json(const TrailResult& r) {
    json j{{"kind", "trail"},
           {"rounds", r.rounds},
           {"trail_type", to_string(r.trail_type)},
           {"mode", to_string(r.mode)},
           {"status", r.status == SearchStatus::exact ? "exact" : "bound_only"},
           {"min_active", r.min_active},
           {"nodes", r.nodes}};
    if (const auto pub = published_min_active(r.trail_type, r.rounds)) {
        j["published_min_active"] = *pub;
        j["discrepancy"] = r.min_active - *pub;
    } else {
        j["published_min_active"] = nullptr;
        j["discrepancy"] = nullptr;
    }
    json w = json::array();
    for (const TrailRound& rd : r.witness)
        w.push_back(json{{"left", to_hex32(rd.left)},
                         {"right", to_hex32(rd.right)},
                         {"sbox_out", to_hex32(rd.sbox_out)},
                         {"active", rd.active}});
    j["witness"] = w;
    if (!r.witness.empty()) {
        j["final_left"] = to_hex32(r.final_left);
        j["final_right"] = to_hex32(r.final_right);
        const std::string err = verify_witness(r);
        j["witness_verified"] = err.empty();
    }
    return j;
}

json to_json(const AvalancheReport& r) {
    return json{{"kind", "avalanche"},
                {"trials", r.trials},
                {"flip_target", r.flip_target == FlipTarget::plaintext_bit ? "plaintext_bit" : "key_bit"},
                {"seed", r.seed},
                {"rounds", r.rounds},
                {"mean_flips", r.mean_flips},
                {"histogram", r.histogram},
                {"per_bit_means", r.per_bit_means},
                {"per_bit_trials", r.per_bit_trials},
                {"output_flip_rate", r.output_flip_rate}};
}

json to_json(const LinearEstimate& e) {
    return json{{"kind", "linear_complexity"},
                {"active_per_segment", e.active_per_segment},
                {"segments", e.segments},
                {"segment_bias", log2_value(e.segment_bias)},
                {"total_bias", log2_value(e.total_bias)},
                {"data_complexity", log2_value(e.data_complexity)},
                {"approximated", e.approximated},
                {"secure_vs_codebook", e.secure_vs_codebook}};
}

json to_json(const DifferentialEstimate& e) {
    return json{{"kind", "differential_complexity"},
                {"active", e.active},
                {"probability", log2_value(e.probability)},
                {"data_complexity", log2_value(e.data_complexity)},
                {"secure_vs_codebook", e.secure_vs_codebook}};
}

json to_json(const KatSearchResult& r) {
    json rows = json::array();
    for (const ProfileVerdict& v : r.rows) {
        json produced = json::array();
        for (Block64 b : v.produced)
            produced.push_back(to_hex(b));
        rows.push_back(json{{"profile", v.profile.to_string()},
                            {"produced", produced},
                            {"matched", v.matched},
                            {"all_matched", v.all_matched}});
    }
    json j{{"kind", "kat"},
           {"profiles_tested", r.rows.size()},
           {"matching_profiles", r.matching_profiles},
           {"rows", rows}};
    j["match"] = r.match ? json(r.match->to_string()) : json(nullptr);
    return j;
}

}  // namespace lici2::analysis
