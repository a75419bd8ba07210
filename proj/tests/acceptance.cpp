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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "lici2/analysis/avalanche.hpp"
#include "lici2/analysis/complexity.hpp"
#include "lici2/analysis/report_json.hpp"
#include "lici2/analysis/tables.hpp"
#include "lici2/analysis/trails.hpp"
#include "lici2/batch.hpp"
#include "lici2/cost/ge.hpp"
#include "lici2/datagram/demo.hpp"
#include "lici2/datagram/frame.hpp"
#include "lici2/rng.hpp"

using namespace lici2;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void report(int id, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", id, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    failures += ok ? 0 : 1;
}

std::string fmt(const char* f, double v) {
    char b[64];
    std::snprintf(b, sizeof b, f, v);
    return b;
}

void sbox_tables() {
    const auto t0 = Clock::now();
    const auto ddt = analysis::build_ddt(SBox4::canonical());
    const auto lat = analysis::build_lat(SBox4::canonical());
    const double ms = since(t0) * 1e3;
    const bool ok = ddt.max_nontrivial() == 4 && lat.max_nontrivial_abs() == 4 && ms < 1.0;
    report(1, ok, "DDT max " + std::to_string(ddt.max_nontrivial()) + ", LAT max |entry| " +
                      std::to_string(lat.max_nontrivial_abs()) + ", " + fmt("%.3f ms", ms));
}

void piling_up() {
    using namespace analysis;
    const int a = piling_up_bias(13, -2).exponent;
    const int b = piling_up_bias(4, a).exponent;
    const int c = linear_attack_complexity(Log2{b}).exponent;
    const int d = differential_attack_complexity(40).exponent;
    report(2, a == -14 && b == -53 && c == 106 && d == 80,
           "bias 2^" + std::to_string(a) + ", composed 2^" + std::to_string(b) + ", N_L 2^" +
               std::to_string(c) + ", N_d 2^" + std::to_string(d));
}

void gate_equivalents() {
    const auto r = cost::ge_report();
    const std::vector<std::string> data = {"272", "16", "45", "24", "0"};
    const std::vector<std::string> key = {"544", "10", "18", "122"};
    bool ok = r.data_rows.size() == data.size() && r.key_rows.size() == key.size();
    for (std::size_t i = 0; ok && i < data.size(); ++i)
        ok = r.data_rows[i].total.to_string() == data[i];
    for (std::size_t i = 0; ok && i < key.size(); ++i)
        ok = r.key_rows[i].total.to_string() == key[i];
    ok = ok && r.data_total.to_string() == "357" && r.key_total.to_string() == "694" &&
         r.grand_total.to_string() == "1051";
    report(3, ok, r.data_total.to_string() + " / " + r.key_total.to_string() + " / " +
                      r.grand_total.to_string() + " GE, all rows checked");
}

void known_answers() {
    const auto t0 = Clock::now();
    const KatSearchResult res = kat_grid_search(published_vectors());
    const double s = since(t0);
    bool ok = res.rows.size() == kProfileCount && s < 1.0;
    std::string detail;
    if (res.match) {
        // Outcome (a): the matched profile reproduces both vectors, encrypt and decrypt.
        for (const KnownAnswer& v : published_vectors())
            ok = ok && encrypt_block(v.plaintext, v.key, *res.match) == v.ciphertext &&
                 decrypt_block(v.ciphertext, v.key, *res.match) == v.plaintext;
        detail = "matched " + res.match->to_string() + " (" + std::to_string(res.matching_profiles) +
                 " of 64 profiles)";
    } else {
        // Outcome (b): the report must still carry all 64 rows.
        detail = "no profile matches; 64-row mismatch report with unverified banner";
        ok = ok && analysis::to_json(res)["rows"].size() == kProfileCount;
    }
    report(4, ok, detail + ", " + fmt("%.3f s", s));
}

void round_trip() {
    const auto t0 = Clock::now();
    SeededRng rng(20260101);
    long checked = 0, bad = 0;
    for (const ConventionProfile& p : all_profiles())
        for (int i = 0; i < 100000; ++i) {
            const Block64 b = rng.block();
            const Key128 k = rng.key();
            bad += decrypt_block(encrypt_block(b, k, p), k, p) != b;
            ++checked;
        }
    const double s = since(t0);
    report(5, bad == 0 && s < 30.0,
           std::to_string(checked) + " pairs over 64 profiles, " + std::to_string(bad) + " failures, " +
               fmt("%.2f s", s));
}

void trail_search() {
    using namespace analysis;
    const auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (TrailType t : {TrailType::linear, TrailType::differential}) {
        detail += std::string(to_string(t)) + " {";
        for (int r = 1; r <= 5; ++r) {
            const TrailResult res = min_active_sboxes(r, t, SearchMode::exact_bitlevel);
            const int pub = *published_min_active(t, r);
            const bool witness = verify_witness(res).empty();
            ok = ok && res.status == SearchStatus::exact && witness;
            const int diff = res.min_active - pub;
            detail += std::to_string(res.min_active) + (diff == 0 ? "" : "(" + std::string(diff > 0 ? "+" : "") + std::to_string(diff) + ")") +
                      (r < 5 ? "," : "} ");
            // A found value above the published one would mean the search missed a trail.
            ok = ok && diff <= 0;
        }
    }
    const double s = since(t0);
    ok = ok && s < 600.0;
    report(6, ok, detail + "found(found-published), all witnesses verified, " + fmt("%.2f s", s));
}

void avalanche() {
    using namespace analysis;
    const ConventionProfile p = ConventionProfile::verified();
    const std::uint64_t seed = 1;
    const auto full = avalanche_test(10000, FlipTarget::plaintext_bit, seed, p);
    const auto again = avalanche_test(10000, FlipTarget::plaintext_bit, seed, p);
    const auto one = avalanche_test(10000, FlipTarget::plaintext_bit, seed, p, 1);
    const auto key = avalanche_test(10000, FlipTarget::key_bit, seed, p);
    const bool deterministic = to_json(full).dump() == to_json(again).dump();
    const bool in_band = full.mean_flips >= 28.0 && full.mean_flips <= 36.0;
    const bool discriminative = one.mean_flips < full.mean_flips;
    report(7, in_band && discriminative && deterministic,
           "plaintext flips mean " + fmt("%.3f", full.mean_flips) + " (band [28, 36]), 1-round " +
               fmt("%.3f", one.mean_flips) + ", deterministic " + (deterministic ? "yes" : "no") +
               "; key flips mean " + fmt("%.3f", key.mean_flips));
}

void frames() {
    using namespace datagram;
    const ConventionProfile p = ConventionProfile::verified();
    SeededRng rng(8);
    const LinkKeys keys = LinkKeys::derive(rng.key());
    bool rt = true;
    for (std::size_t n = 0; n <= kDefaultMaxPayload && rt; ++n) {
        Bytes m(n);
        for (auto& x : m)
            x = static_cast<std::uint8_t>(rng.next_u32());
        rt = frame_decode(frame_encode(m, 1, 2, static_cast<std::uint32_t>(n), keys, p), keys, p).plaintext == m;
    }
    const std::string msg = "hello 6lowpan";
    const Bytes ref = frame_encode(Bytes(msg.begin(), msg.end()), 0xA, 0xB, 42, keys, p);
    long accepted = 0;
    for (std::size_t bit = 0; bit < ref.size() * 8; ++bit) {
        Bytes x = ref;
        x[bit / 8] ^= static_cast<std::uint8_t>(1U << (bit % 8));
        try {
            frame_decode(x, keys, p);
            ++accepted;
        } catch (const FrameError&) {
        }
    }
    const std::size_t size33 = frame_encode(Bytes(33), 1, 2, 3, keys, p).size();
    bool replay = false;
    for (TransportKind kind : {TransportKind::in_memory, TransportKind::udp_datagram}) {
        const auto tr = demo_nodes(kind, parse_script("send a\nsend b\nreplay 2\nsend c\n"), keys, p);
        replay = (kind == TransportKind::in_memory || replay) && tr.entries.size() == 4 &&
                 tr.entries[2].verdict == "ReplayDetected" && tr.delivered == 3;
    }
    report(8, rt && accepted == 0 && size33 == 53 && replay,
           std::string("round trip 0..1024 ") + (rt ? "ok" : "BROKEN") + ", " +
               std::to_string(ref.size() * 8) + " corruptions, " + std::to_string(accepted) +
               " accepted, 33-byte payload -> " + std::to_string(size33) + " bytes, replay " +
               (replay ? "rejected (memory + udp)" : "NOT rejected"));
}

void out_of_scope() {
    // Platform figures are not result targets; the local batch throughput is informational.
    std::vector<Block64> in(1 << 16), out(in.size());
    const RoundKeys rk = key_schedule(Key128{}, ConventionProfile::verified());
    const auto t0 = Clock::now();
    encrypt_blocks(in, out, rk, ConventionProfile::verified());
    const double s = since(t0);
    report(9, true, "FLASH/RAM, power, ARM7 timings and Kbps are not reproduced; local " +
                        std::string(kernel_name(best_kernel())) + " batch " +
                        fmt("%.0f blocks/s", s > 0 ? double(in.size()) / s : 0.0) + " (no threshold)");
}

}  // namespace

int main() {
    sbox_tables();
    piling_up();
    gate_equivalents();
    known_answers();
    round_trip();
    trail_search();
    avalanche();
    frames();
    out_of_scope();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
