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

// lici2: command-line front end for the cipher, its analysis tools, the GE
// calculator and the datagram demo.
//
// Exit codes: 0 success, 1 operation failed (e.g. frame rejected),
// 2 usage error, 3 analysis deadline hit (partial bound reported).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "lici2/analysis/avalanche.hpp"
#include "lici2/analysis/complexity.hpp"
#include "lici2/analysis/report_json.hpp"
#include "lici2/analysis/tables.hpp"
#include "lici2/analysis/trails.hpp"
#include "lici2/batch.hpp"
#include "lici2/cipher.hpp"
#include "lici2/cost/ge.hpp"
#include "lici2/datagram/demo.hpp"
#include "lici2/datagram/frame.hpp"
#include "lici2/rng.hpp"

namespace {

using nlohmann::json;
using namespace lici2;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

constexpr const char* kDefaultProfileFile = "lici2-profile.conf";
constexpr const char* kProfileEnv = "LICI2_PROFILE_PATH";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string profile;
    std::string format = "text";
};

bool json_out(const Options& o) { return o.format == "json"; }

std::string profile_path() {
    const char* env = std::getenv(kProfileEnv);
    return env && *env ? env : kDefaultProfileFile;
}

// --profile, then the persisted profile file, then the built-in default.
ConventionProfile resolve_profile(const Options& o, std::string* source = nullptr) {
    try {
        if (!o.profile.empty()) {
            if (source)
                *source = "argv";
            return ConventionProfile::parse(o.profile);
        }
        std::ifstream in(profile_path());
        std::string line;
        while (in && std::getline(in, line)) {
            if (line.empty() || line[0] == '#')
                continue;
            if (source)
                *source = profile_path();
            return ConventionProfile::parse(line);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (source)
        *source = "built-in default";
    return ConventionProfile::default_profile();
}

template <typename F>
auto usage_guard(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const Options& o, const json& j, const std::string& text) {
    if (json_out(o))
        std::cout << j.dump() << "\n";
    else
        std::cout << text;
}

// ---- cipher ----

int cmd_crypt(const Options& o, const std::string& key_hex, const std::string& in_hex, bool enc) {
    const Key128 key = usage_guard([&] { return parse_key_hex(key_hex); });
    const Block64 in = usage_guard([&] { return parse_block_hex(in_hex); });
    const ConventionProfile prof = resolve_profile(o);
    const Block64 out = enc ? encrypt_block(in, key, prof) : decrypt_block(in, key, prof);
    emit(o,
         json{{"kind", enc ? "encrypt" : "decrypt"},
              {"profile", prof.to_string()},
              {"key", to_hex(key)},
              {"input", to_hex(in)},
              {"output", to_hex(out)}},
         to_hex(out) + "\n");
    return 0;
}

int cmd_keys(const Options& o, const std::string& key_hex) {
    const Key128 key = usage_guard([&] { return parse_key_hex(key_hex); });
    const ConventionProfile prof = resolve_profile(o);
    const RoundKeys rk = key_schedule(key, prof);
    json arr = json::array();
    std::string text;
    for (const RoundKey32& k : rk) {
        arr.push_back({{"round", k.round_index}, {"key", to_hex32(k.bits)}});
        char line[32];
        std::snprintf(line, sizeof line, "K%-2d %s\n", k.round_index, to_hex32(k.bits).c_str());
        text += line;
    }
    emit(o, json{{"kind", "keys"}, {"profile", prof.to_string()}, {"round_keys", arr}}, text);
    return 0;
}

int cmd_kat(const Options& o, bool save) {
    const auto& vectors = published_vectors();
    const auto t0 = std::chrono::steady_clock::now();
    const KatSearchResult res = kat_grid_search(vectors);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::string text;
    text += "published vectors:\n";
    for (const KnownAnswer& v : vectors)
        text += "  P=" + to_hex(v.plaintext) + " K=" + to_hex(v.key) + " C=" + to_hex(v.ciphertext) + "\n";
    text += "\nprofile                 vector1           vector2           verdict\n";
    for (const ProfileVerdict& row : res.rows) {
        char line[128];
        std::snprintf(line, sizeof line, "%-22s  %s%c %s%c %s\n", row.profile.to_string().c_str(),
                      to_hex(row.produced[0]).c_str(), row.matched[0] ? '*' : ' ',
                      to_hex(row.produced[1]).c_str(), row.matched[1] ? '*' : ' ',
                      row.all_matched ? "MATCH" : "mismatch");
        text += line;
    }
    json j = analysis::to_json(res);
    if (res.match) {
        text += "\nverdict: " + std::to_string(res.matching_profiles) +
                " profile(s) reproduce every published vector; canonical profile " +
                res.match->to_string() + "\n";
        if (save) {
            std::ofstream out(profile_path());
            if (!out)
                throw std::runtime_error("cannot write '" + profile_path() + "'");
            out << "# written by `lici2 kat`: profile reproducing the published vectors\n"
                << res.match->to_string() << "\n";
            text += "saved to " + profile_path() + "\n";
            j["saved_to"] = profile_path();
        }
    } else {
        text += "\n*** UNVERIFIED PUBLISHED VECTORS: no convention profile reproduces them ***\n";
        j["banner"] = "UNVERIFIED PUBLISHED VECTORS";
    }
    if (!json_out(o))
        std::cerr << "grid search took " << ms << " ms\n";
    emit(o, j, text);
    return 0;
}

// ---- analysis ----

int cmd_table(const Options& o, bool ddt) {
    if (ddt) {
        const auto t = analysis::build_ddt(SBox4::canonical());
        emit(o, analysis::to_json(t),
             analysis::render(t) + "max nontrivial entry " + std::to_string(t.max_nontrivial()) +
                 " (differential probability " + std::to_string(t.max_nontrivial()) + "/16)\n");
    } else {
        const auto t = analysis::build_lat(SBox4::canonical());
        emit(o, analysis::to_json(t),
             analysis::render(t) + "max nontrivial |entry| " + std::to_string(t.max_nontrivial_abs()) +
                 " (bias " + std::to_string(t.max_nontrivial_abs()) + "/16)\n");
    }
    return 0;
}

int cmd_trails(const Options& o, const std::string& type, const std::string& mode, int rounds,
               int max_rounds, long timeout_ms) {
    std::vector<analysis::TrailType> types;
    if (type == "linear" || type == "both")
        types.push_back(analysis::TrailType::linear);
    if (type == "differential" || type == "both")
        types.push_back(analysis::TrailType::differential);
    const auto m = mode == "exact" ? analysis::SearchMode::exact_bitlevel
                                   : analysis::SearchMode::truncated_nibble;
    const int lo = max_rounds > 0 ? 1 : rounds;
    const int hi = max_rounds > 0 ? max_rounds : rounds;
    const ConventionProfile prof = resolve_profile(o);

    json results = json::array();
    std::string text = "type          mode              rounds  found  published  diff  status     witness\n";
    bool timed_out = false;
    for (auto t : types) {
        for (int r = lo; r <= hi; ++r) {
            analysis::SearchOptions opts;
            opts.time_budget = std::chrono::milliseconds(timeout_ms);
            const auto res = usage_guard([&] { return analysis::min_active_sboxes(r, t, m, prof, opts); });
            timed_out = timed_out || res.status == analysis::SearchStatus::bound_only;
            results.push_back(analysis::to_json(res));
            const auto pub = analysis::published_min_active(t, r);
            std::string witness = res.witness.empty() ? "-" : (analysis::verify_witness(res).empty() ? "verified" : "INVALID");
            char line[160];
            std::snprintf(line, sizeof line, "%-13s %-17s %6d  %5d  %9s  %4s  %-9s  %s\n",
                          std::string(analysis::to_string(t)).c_str(),
                          std::string(analysis::to_string(m)).c_str(), r, res.min_active,
                          pub ? std::to_string(*pub).c_str() : "-",
                          pub ? ((res.min_active - *pub > 0 ? "+" : "") + std::to_string(res.min_active - *pub)).c_str() : "-",
                          res.status == analysis::SearchStatus::exact ? "exact" : (m == analysis::SearchMode::exact_bitlevel ? "bound" : "lowerbd"),
                          witness.c_str());
            text += line;
        }
    }
    text += "diff = found - published; a negative value is a trail with fewer active S-boxes than published.\n";
    if (m == analysis::SearchMode::truncated_nibble)
        text += "truncated mode values are lower bounds on the bit-level minimum.\n";
    emit(o, json{{"kind", "trails"}, {"results", results}}, text);
    return timed_out ? kExitTimeout : 0;
}

std::string pow2(analysis::Log2 v) { return "2^" + std::to_string(v.exponent); }

int cmd_complexity(const Options& o, const std::string& type, int active, int segments, int per_box) {
    if (type == "linear") {
        const auto e = usage_guard([&] { return analysis::linear_estimate(active, segments, per_box); });
        std::string text = "active S-boxes " + std::to_string(active) + " per segment, " +
                           std::to_string(segments) + " segment(s)\n" + "segment bias " +
                           pow2(e.segment_bias) + "\n" + "total bias " + pow2(e.total_bias) +
                           (e.approximated ? " (segment multiplier approximation, not a searched bound)" : "") +
                           "\n" + "N_L " + pow2(e.data_complexity) + "\n" +
                           (e.secure_vs_codebook ? "exceeds the 2^64 codebook\n" : "within the 2^64 codebook\n");
        emit(o, analysis::to_json(e), text);
    } else {
        const auto e = usage_guard([&] { return analysis::differential_estimate(active * segments, per_box); });
        std::string text = "active S-boxes " + std::to_string(active * segments) + "\n" +
                           "p_d " + pow2(e.probability) + "\n" + "N_d " + pow2(e.data_complexity) + "\n" +
                           (e.secure_vs_codebook ? "exceeds the 2^64 codebook\n" : "within the 2^64 codebook\n");
        emit(o, analysis::to_json(e), text);
    }
    return 0;
}

int cmd_avalanche(const Options& o, std::uint64_t trials, std::uint64_t seed, const std::string& target,
                  int rounds) {
    const ConventionProfile prof = resolve_profile(o);
    const auto t = target == "key" ? analysis::FlipTarget::key_bit : analysis::FlipTarget::plaintext_bit;
    const auto rep = usage_guard([&] { return analysis::avalanche_test(trials, t, seed, prof, rounds); });
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "trials %llu, %s flips, %d rounds, seed %llu, profile %s\nmean ciphertext bits changed: %.4f of 64 (%.2f%%)\n",
                  static_cast<unsigned long long>(trials), target.c_str(), rounds,
                  static_cast<unsigned long long>(seed), prof.to_string().c_str(), rep.mean_flips,
                  rep.mean_flips * 100.0 / 64.0);
    std::string text = buf;
    text += "histogram (distance: count):";
    for (int d = 0; d <= 64; ++d)
        if (rep.histogram[d] != 0)
            text += " " + std::to_string(d) + ":" + std::to_string(rep.histogram[d]);
    text += "\n";
    json j = analysis::to_json(rep);
    j["profile"] = prof.to_string();
    emit(o, j, text);
    return 0;
}

int cmd_ge(const Options& o, const std::string& data_bill, const std::string& key_bill,
           const std::string& weights_file) {
    const auto load = [](const std::string& path) {
        try {
            return json::parse(read_file(path));
        } catch (const json::exception& e) {
            throw UsageError("'" + path + "': " + e.what());
        }
    };
    const auto report = usage_guard([&] {
        try {
            const auto data = data_bill.empty() ? cost::canonical_data_path() : cost::bill_from_json(load(data_bill));
            const auto key = key_bill.empty() ? cost::canonical_key_path() : cost::bill_from_json(load(key_bill));
            const auto weights = weights_file.empty() ? cost::GateWeightTable::canonical()
                                                      : cost::weights_from_json(load(weights_file));
            return cost::ge_report(data, key, weights);
        } catch (const json::exception& e) {
            throw std::invalid_argument(e.what());
        }
    });
    emit(o, cost::to_json(report), cost::render(report));
    return 0;
}

int cmd_bench(const Options& o, std::size_t blocks, std::uint64_t seed, const std::string& kernel) {
    const ConventionProfile prof = resolve_profile(o);
    SeededRng rng(seed);
    std::vector<Block64> data(blocks);
    for (auto& b : data)
        b = rng.block();
    const RoundKeys rk = key_schedule(rng.key(), prof);

    std::vector<Kernel> kernels;
    if (kernel == "auto")
        kernels = supported_kernels();
    else if (kernel == "scalar")
        kernels = {Kernel::scalar};
    else
        kernels = {Kernel::avx2};

    json rows = json::array();
    std::string text;
    std::vector<Block64> out(blocks);
    for (Kernel k : kernels) {
        if (!kernel_supported(k))
            throw UsageError("kernel " + std::string(kernel_name(k)) + " not supported on this CPU");
        encrypt_blocks(data, out, rk, prof, k);  // warm-up
        const auto t0 = std::chrono::steady_clock::now();
        encrypt_blocks(data, out, rk, prof, k);
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const double bps = s > 0 ? static_cast<double>(blocks) / s : 0.0;
        char line[128];
        std::snprintf(line, sizeof line, "%-7s %12.0f blocks/s  %8.2f MB/s\n",
                      std::string(kernel_name(k)).c_str(), bps, bps * 8 / 1e6);
        text += line;
        rows.push_back({{"kernel", kernel_name(k)}, {"blocks", blocks}, {"blocks_per_second", bps}});
    }
    emit(o, json{{"kind", "bench"}, {"profile", prof.to_string()}, {"results", rows}}, text);
    return 0;
}

// ---- frames ----

std::vector<std::uint8_t> parse_hex_bytes(const std::string& hex) {
    std::string clean;
    for (char c : hex)
        if (!std::isspace(static_cast<unsigned char>(c)))
            clean.push_back(c);
    if (clean.size() % 2 != 0)
        throw UsageError("hex byte string has odd length");
    std::vector<std::uint8_t> out;
    for (std::size_t i = 0; i < clean.size(); i += 2) {
        const std::string byte = clean.substr(i, 2);
        if (!std::isxdigit(static_cast<unsigned char>(byte[0])) || !std::isxdigit(static_cast<unsigned char>(byte[1])))
            throw UsageError("invalid hex byte '" + byte + "'");
        out.push_back(static_cast<std::uint8_t>(std::stoul(byte, nullptr, 16)));
    }
    return out;
}

std::string hex_bytes(const std::vector<std::uint8_t>& b) {
    static const char* d = "0123456789abcdef";
    std::string s;
    for (std::uint8_t x : b) {
        s += d[x >> 4];
        s += d[x & 15];
    }
    return s;
}

int cmd_frame_encode(const Options& o, const std::string& key_hex, const std::string& text,
                     const std::string& payload_hex, int src, int dst, std::uint32_t seq) {
    const Key128 key = usage_guard([&] { return parse_key_hex(key_hex); });
    const ConventionProfile prof = resolve_profile(o);
    const auto payload = payload_hex.empty() ? std::vector<std::uint8_t>(text.begin(), text.end())
                                             : parse_hex_bytes(payload_hex);
    const auto frame = datagram::frame_encode(payload, static_cast<std::uint16_t>(src),
                                              static_cast<std::uint16_t>(dst), seq,
                                              datagram::LinkKeys::derive(key), prof);
    emit(o,
         json{{"kind", "frame"}, {"profile", prof.to_string()}, {"frame", hex_bytes(frame)},
              {"frame_bytes", frame.size()}, {"payload_bytes", payload.size()}},
         hex_bytes(frame) + "\n");
    return 0;
}

int cmd_frame_decode(const Options& o, const std::string& key_hex, const std::string& frame_hex) {
    const Key128 key = usage_guard([&] { return parse_key_hex(key_hex); });
    const ConventionProfile prof = resolve_profile(o);
    const auto bytes = parse_hex_bytes(frame_hex);
    try {
        const auto f = datagram::frame_decode(bytes, datagram::LinkKeys::derive(key), prof);
        const std::string text(f.plaintext.begin(), f.plaintext.end());
        emit(o,
             json{{"kind", "frame_decoded"}, {"src", f.header.src_id}, {"dst", f.header.dst_id},
                  {"seq", f.header.seq_nonce}, {"flags", f.header.flags},
                  {"payload_hex", hex_bytes(f.plaintext)}, {"payload_bytes", f.plaintext.size()}},
             text + "\n");
        return 0;
    } catch (const datagram::FrameError& e) {
        const json err{{"error", datagram::to_string(e.code())}, {"message", e.what()}};
        if (json_out(o))
            std::cout << err.dump() << "\n";
        else
            std::cerr << "error: " << datagram::to_string(e.code()) << ": " << e.what() << "\n";
        return kExitFailure;
    }
}

constexpr const char* kDefaultScript = R"(# node A -> node B
send hello 6lowpan
send temperature=21.5C
corrupt humidity=40%
send battery=3.1V
replay 2
)";

int cmd_frame_demo(const Options& o, const std::string& key_hex, const std::string& transport,
                   const std::string& script_path) {
    const Key128 key = usage_guard([&] { return parse_key_hex(key_hex); });
    const ConventionProfile prof = resolve_profile(o);
    const std::string script_text = script_path.empty() ? kDefaultScript : read_file(script_path);
    const auto script = usage_guard([&] { return datagram::parse_script(script_text); });
    const auto kind = transport == "udp" ? datagram::TransportKind::udp_datagram
                                         : datagram::TransportKind::in_memory;
    const auto tr = datagram::demo_nodes(kind, script, datagram::LinkKeys::derive(key), prof);
    std::cout << tr.to_json_lines();
    (void)o;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lici2: LiCi-2 block cipher lab (cipher, cryptanalysis, GE model, datagram demo)"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--profile", opt.profile,
                   "convention profile: compact form (e.g. msb/LR/w31/ext/rc0), 'default' or "
                   "'verified'. Falls back to the file named by $LICI2_PROFILE_PATH (default ./" +
                       std::string(kDefaultProfileFile) + ", written by `kat`), then 'default'");
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int rc = 0;

    std::string key_hex, in_hex;
    auto* enc = app.add_subcommand("encrypt", "encrypt one 64-bit block");
    enc->add_option("--key", key_hex, "128-bit key, 32 hex digits")->required();
    enc->add_option("--in", in_hex, "64-bit block, 16 hex digits")->required();
    enc->callback([&] { rc = cmd_crypt(opt, key_hex, in_hex, true); });

    auto* dec = app.add_subcommand("decrypt", "decrypt one 64-bit block");
    dec->add_option("--key", key_hex, "128-bit key, 32 hex digits")->required();
    dec->add_option("--in", in_hex, "64-bit block, 16 hex digits")->required();
    dec->callback([&] { rc = cmd_crypt(opt, key_hex, in_hex, false); });

    auto* keys = app.add_subcommand("keys", "print the 25 round keys");
    keys->add_option("--key", key_hex, "128-bit key, 32 hex digits")->required();
    keys->callback([&] { rc = cmd_keys(opt, key_hex); });

    bool no_save = false;
    auto* kat = app.add_subcommand("kat", "grid-search all 64 profiles against the published vectors");
    kat->add_flag("--no-save", no_save, "do not persist the matched profile");
    kat->callback([&] { rc = cmd_kat(opt, !no_save); });

    auto* analyze = app.add_subcommand("analyze", "S-box tables, trail search, attack complexity");
    analyze->require_subcommand(1);
    analyze->add_subcommand("ddt", "difference distribution table")->callback([&] { rc = cmd_table(opt, true); });
    analyze->add_subcommand("lat", "linear approximation table")->callback([&] { rc = cmd_table(opt, false); });

    std::string trail_type = "both", trail_mode = "exact";
    int trail_rounds = 5, trail_max = 0;
    long timeout_ms = 600000;
    auto* trails = analyze->add_subcommand("trails", "minimum active S-boxes");
    trails->add_option("--type", trail_type)->check(CLI::IsMember({"linear", "differential", "both"}))->capture_default_str();
    trails->add_option("--mode", trail_mode)->check(CLI::IsMember({"exact", "truncated"}))->capture_default_str();
    trails->add_option("--rounds", trail_rounds, "single round count")->capture_default_str();
    trails->add_option("--max-rounds", trail_max, "report every round count 1..N instead");
    trails->add_option("--timeout-ms", timeout_ms, "search deadline per round count (0 = none)")->capture_default_str();
    trails->callback([&] { rc = cmd_trails(opt, trail_type, trail_mode, trail_rounds, trail_max, timeout_ms); });

    std::string cx_type = "linear";
    int cx_active = 13, cx_segments = 1, cx_per_box = -2;
    auto* cx = analyze->add_subcommand("complexity", "piling-up bias and data complexity");
    cx->add_option("--type", cx_type)->check(CLI::IsMember({"linear", "differential"}))->capture_default_str();
    cx->add_option("--active", cx_active, "active S-boxes (per segment)")->capture_default_str();
    cx->add_option("--segments", cx_segments, "compose this many identical segments (20 rounds = 4 x 5)")->capture_default_str();
    cx->add_option("--per-box-log2", cx_per_box, "per-S-box bias / probability exponent")->capture_default_str();
    cx->callback([&] { rc = cmd_complexity(opt, cx_type, cx_active, cx_segments, cx_per_box); });

    std::uint64_t av_trials = 10000, av_seed = 1;
    std::string av_target = "plaintext";
    int av_rounds = kRounds;
    auto* av = app.add_subcommand("avalanche", "single-bit-flip avalanche measurement");
    av->add_option("--trials", av_trials)->capture_default_str();
    av->add_option("--seed", av_seed)->capture_default_str();
    av->add_option("--target", av_target)->check(CLI::IsMember({"plaintext", "key"}))->capture_default_str();
    av->add_option("--rounds", av_rounds, "reduced-round diagnostic when below 25")->capture_default_str();
    av->callback([&] { rc = cmd_avalanche(opt, av_trials, av_seed, av_target, av_rounds); });

    std::string data_bill, key_bill, weights_file;
    auto* ge = app.add_subcommand("ge", "gate-equivalent area breakdown");
    ge->add_option("--data-bill", data_bill, "JSON bill for the data path (default: built-in)");
    ge->add_option("--key-bill", key_bill, "JSON bill for the key path (default: built-in)");
    ge->add_option("--weights", weights_file, "JSON gate weight table (default: built-in)");
    ge->callback([&] { rc = cmd_ge(opt, data_bill, key_bill, weights_file); });

    std::size_t bench_blocks = 1 << 20;
    std::uint64_t bench_seed = 1;
    std::string bench_kernel = "auto";
    auto* bench = app.add_subcommand("bench", "local batch encryption throughput");
    bench->add_option("--blocks", bench_blocks)->capture_default_str();
    bench->add_option("--seed", bench_seed)->capture_default_str();
    bench->add_option("--kernel", bench_kernel)->check(CLI::IsMember({"auto", "scalar", "avx2"}))->capture_default_str();
    bench->callback([&] { rc = cmd_bench(opt, bench_blocks, bench_seed, bench_kernel); });

    auto* frame = app.add_subcommand("frame", "authenticated datagram frames");
    frame->require_subcommand(1);
    std::string fr_text, fr_payload_hex, fr_hex, fr_transport = "memory", fr_script;
    int fr_src = 0x000A, fr_dst = 0x000B;
    std::uint32_t fr_seq = 1;
    auto* fenc = frame->add_subcommand("encode", "encode one frame");
    fenc->add_option("--key", key_hex, "link key, 32 hex digits")->required();
    fenc->add_option("--text", fr_text, "payload as text");
    fenc->add_option("--payload-hex", fr_payload_hex, "payload as hex bytes");
    fenc->add_option("--src", fr_src)->check(CLI::Range(0, 0xFFFF))->capture_default_str();
    fenc->add_option("--dst", fr_dst)->check(CLI::Range(0, 0xFFFF))->capture_default_str();
    fenc->add_option("--seq", fr_seq)->capture_default_str();
    fenc->callback([&] { rc = cmd_frame_encode(opt, key_hex, fr_text, fr_payload_hex, fr_src, fr_dst, fr_seq); });
    auto* fdec = frame->add_subcommand("decode", "verify and decode one frame");
    fdec->add_option("--key", key_hex, "link key, 32 hex digits")->required();
    fdec->add_option("--frame", fr_hex, "frame as hex bytes")->required();
    fdec->callback([&] { rc = cmd_frame_decode(opt, key_hex, fr_hex); });
    auto* fdemo = frame->add_subcommand("demo", "two-node sender/receiver run, JSON-lines transcript");
    key_hex = std::string(32, '0');
    fdemo->add_option("--key", key_hex, "link key")->capture_default_str();
    fdemo->add_option("--transport", fr_transport)->check(CLI::IsMember({"memory", "udp"}))->capture_default_str();
    fdemo->add_option("--script", fr_script, "script file (default: built-in five-step script)");
    fdemo->callback([&] { rc = cmd_frame_demo(opt, key_hex, fr_transport, fr_script); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const UsageError& e) {
        if (opt.format == "json")
            std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        if (opt.format == "json")
            std::cerr << json{{"error", "failure"}, {"message", e.what()}}.dump() << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return rc;
}
