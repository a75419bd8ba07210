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

#include "lici2/analysis/trails.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>

#include "lici2/analysis/tables.hpp"
#include "lici2/cipher.hpp"

namespace lici2::analysis {

std::string_view to_string(TrailType t) noexcept {
    return t == TrailType::linear ? "linear" : "differential";
}

std::string_view to_string(SearchMode m) noexcept {
    return m == SearchMode::exact_bitlevel ? "exact_bitlevel" : "truncated_nibble";
}

std::optional<int> published_min_active(TrailType type, int rounds) noexcept {
    static constexpr std::array<int, 5> kLinear = {0, 1, 3, 7, 13};
    static constexpr std::array<int, 5> kDifferential = {0, 1, 3, 6, 10};
    if (rounds < 1 || rounds > 5)
        return std::nullopt;
    return type == TrailType::linear ? kLinear[rounds - 1] : kDifferential[rounds - 1];
}

namespace {

using Clock = std::chrono::steady_clock;

// Nonzero S-box transitions, ascending: next[in] lists outputs with a
// nonzero DDT count (differential) or LAT entry (linear, in = input mask).
struct Transitions {
    std::array<std::vector<std::uint8_t>, 16> next;
};

const Transitions& transitions(TrailType type) {
    static const Transitions diff = [] {
        Transitions t;
        const DDT d = build_ddt(SBox4::canonical());
        for (int a = 1; a < 16; ++a)
            for (int b = 1; b < 16; ++b)
                if (d.counts[a][b] != 0)
                    t.next[a].push_back(static_cast<std::uint8_t>(b));
        return t;
    }();
    static const Transitions lin = [] {
        Transitions t;
        const LAT l = build_lat(SBox4::canonical());
        for (int a = 1; a < 16; ++a)
            for (int b = 1; b < 16; ++b)
                if (l.entries[a][b] != 0)
                    t.next[a].push_back(static_cast<std::uint8_t>(b));
        return t;
    }();
    return type == TrailType::linear ? lin : diff;
}

struct DeadlineHit {};

// Iterative-deepening branch and bound. For a budget B it looks for the first
// nonzero trail (in ascending enumeration order) with at most B active
// S-boxes, pruning with best_[k], the proven minimum for k rounds: the tail
// of any trail after round i is itself a nonzero trail of r - i rounds.
//
// Trails are invariant under rotating every word by a whole nibble, so the
// first nonzero word of the trail start is required to have nibble 0 active.
class ExactSearch {
public:
    ExactSearch(TrailType type, Clock::time_point deadline, bool has_deadline)
        : type_(type), tr_(transitions(type)), deadline_(deadline), has_deadline_(has_deadline) {}

    void seed_bounds(const std::vector<int>& known) { best_ = known; }
    const std::vector<int>& bounds() const { return best_; }
    std::uint64_t nodes() const { return nodes_; }

    // Extends best_ up to `rounds`, returns the witness for `rounds`.
    // On deadline, *lower_bound receives the proven bound and nothing is returned.
    std::optional<std::vector<TrailRound>> solve(int rounds, int* lower_bound) {
        if (best_.empty())
            best_.push_back(0);
        std::vector<TrailRound> witness;
        for (int r = 1; r <= rounds; ++r) {
            if (r < static_cast<int>(best_.size()) && r != rounds)
                continue;
            int budget = r < static_cast<int>(best_.size()) ? best_[r] : best_[r - 1];
            for (;; ++budget) {
                try {
                    if (find(r, budget))
                        break;
                } catch (const DeadlineHit&) {
                    *lower_bound = budget;
                    return std::nullopt;
                }
            }
            if (r >= static_cast<int>(best_.size()))
                best_.push_back(budget);
            if (r == rounds)
                witness = path_;
        }
        return witness;
    }

private:
    // --- shared helpers ---

    void tick() {
        if ((++nodes_ & 0xFFFF) == 0 && has_deadline_ && Clock::now() > deadline_)
            throw DeadlineHit{};
    }

    int tail_bound(int rounds_left) const { return rounds_left <= 0 ? 0 : best_[rounds_left]; }

    // Calls fn(w) for every word with at most `budget` active nibbles, ascending.
    // With `anchor`, nibble 0 must be active.
    template <typename Fn>
    bool for_each_word(int budget, bool anchor, Fn&& fn) {
        return words_rec(7, 0, budget, anchor, fn);
    }

    template <typename Fn>
    bool words_rec(int nib, HalfWord32 acc, int budget, bool anchor, Fn& fn) {
        if (nib < 0)
            return fn(acc);
        const unsigned lo = (nib == 0 && anchor) ? 1 : 0;
        for (unsigned v = lo; v < 16; ++v) {
            if (v != 0 && budget == 0)
                break;
            if (words_rec(nib - 1, acc | (static_cast<HalfWord32>(v) << (4 * nib)),
                          budget - (v != 0), anchor, fn))
                return true;
        }
        return false;
    }

    // Calls fn(out) for every S-layer output compatible with `in`, ascending.
    template <typename Fn>
    bool for_each_output(HalfWord32 in, Fn&& fn) {
        return outputs_rec(7, in, 0, fn);
    }

    template <typename Fn>
    bool outputs_rec(int nib, HalfWord32 in, HalfWord32 acc, Fn& fn) {
        if (nib < 0)
            return fn(acc);
        const unsigned a = (in >> (4 * nib)) & 0xF;
        if (a == 0)
            return outputs_rec(nib - 1, in, acc, fn);
        for (std::uint8_t b : tr_.next[a])
            if (outputs_rec(nib - 1, in, acc | (static_cast<HalfWord32>(b) << (4 * nib)), fn))
                return true;
        return false;
    }

    HalfWord32 first_output(HalfWord32 in) const {
        HalfWord32 out = 0;
        for (int n = 0; n < 8; ++n) {
            const unsigned a = (in >> (4 * n)) & 0xF;
            if (a != 0)
                out |= static_cast<HalfWord32>(tr_.next[a].front()) << (4 * n);
        }
        return out;
    }

    HalfWord32 next_left(HalfWord32 sbox_out, HalfWord32 right) const {
        const HalfWord32 t = rotl32(sbox_out, kF1Rotation);
        return type_ == TrailType::differential ? t ^ right : t;
    }

    HalfWord32 next_right(HalfWord32 right, HalfWord32 new_left) const {
        return type_ == TrailType::differential ? right : right ^ new_left;
    }

    // Round `i` (0-based) of an r-round trail, cost = active S-boxes in rounds < i.
    bool dfs(int i, int r, HalfWord32 left, HalfWord32 right, int cost, int budget) {
        tick();
        const int a = active_nibbles(left);
        if (cost + a + tail_bound(r - i - 1) > budget)
            return false;
        path_[i] = {left, right, 0, a};
        if (i == r - 1) {
            path_[i].sbox_out = first_output(left);
            return true;
        }
        return for_each_output(left, [&](HalfWord32 out) {
            path_[i].sbox_out = out;
            const HalfWord32 nl = next_left(out, right);
            return dfs(i + 1, r, nl, next_right(right, nl), cost + a, budget);
        });
    }

    bool find(int r, int budget) {
        path_.assign(r, TrailRound{});
        if (type_ == TrailType::linear)
            return find_linear(r, budget);
        return find_differential(r, budget);
    }

    // Linear masks: the F-half chain alone decides the cost; the XOR-half
    // mask only accumulates. A zero F-half start needs a nonzero XOR-half
    // mask (1, the smallest) to be a nonzero trail; otherwise start it at 0.
    bool find_linear(int r, int budget) {
        if (dfs(0, r, 0, 1, 0, budget))
            return true;
        return for_each_word(budget - tail_bound(r - 1), true,
                             [&](HalfWord32 a1) { return dfs(0, r, a1, 0, 0, budget); });
    }

    // Differences: the XOR-half difference is constant along the trail, so the
    // first two F-half differences (and the first S-layer output) fix it.
    bool find_differential(int r, int budget) {
        if (r == 1)
            return dfs(0, r, 0, 1, 0, budget);
        // Zero first F-half difference: right = next left, anchored.
        const bool zero_start = for_each_word(budget - tail_bound(r - 2), true, [&](HalfWord32 d) {
            path_[0] = {0, d, 0, 0};
            return dfs(1, r, d, d, 0, budget);
        });
        if (zero_start)
            return true;
        return for_each_word(budget - tail_bound(r - 1), true, [&](HalfWord32 l1) {
            const int a1 = active_nibbles(l1);
            return for_each_output(l1, [&](HalfWord32 out1) {
                const HalfWord32 t1 = rotl32(out1, kF1Rotation);
                return for_each_word(budget - a1 - tail_bound(r - 2), false, [&](HalfWord32 l2) {
                    tick();
                    const HalfWord32 right = t1 ^ l2;
                    path_[0] = {l1, right, out1, a1};
                    return dfs(1, r, l2, right, a1, budget);
                });
            });
        });
    }

    TrailType type_;
    const Transitions& tr_;
    Clock::time_point deadline_;
    bool has_deadline_;
    std::vector<int> best_;
    std::vector<TrailRound> path_;
    std::uint64_t nodes_ = 0;
};

// Proven per-round minima, shared between calls so repeated queries for
// growing round counts do not redo the shorter searches.
std::mutex g_bounds_mutex;
std::map<TrailType, std::vector<int>> g_bounds;

// ---- truncated (nibble-activity) model ----
//
// rotl 11 sends bit b of nibble j to nibble j+2 (b = 0) or j+3 (b = 1..3), so
// an active nibble lands in {j+2}, {j+3} or both. A truncated XOR of two
// patterns is active wherever exactly one is, and free where both are.

std::uint8_t rot8(unsigned x, int n) {
    n &= 7;
    return static_cast<std::uint8_t>(((x << n) | (x >> (8 - n))) & 0xFF);
}

// spreads[A] = every pattern rotl11 can produce from an S-layer output with activity A.
const std::array<std::vector<std::uint8_t>, 256>& spreads() {
    static const auto table = [] {
        std::array<std::vector<std::uint8_t>, 256> out;
        for (unsigned a = 0; a < 256; ++a) {
            std::array<bool, 256> reach{};
            reach[0] = true;
            for (int j = 0; j < 8; ++j) {
                if (!((a >> j) & 1))
                    continue;
                std::array<bool, 256> next{};
                const std::uint8_t choices[3] = {rot8(1U << 2, j), rot8(1U << 3, j),
                                                 static_cast<std::uint8_t>(rot8(1U << 2, j) | rot8(1U << 3, j))};
                for (unsigned s = 0; s < 256; ++s)
                    if (reach[s])
                        for (std::uint8_t c : choices)
                            next[s | c] = true;
                reach = next;
            }
            for (unsigned s = 0; s < 256; ++s)
                if (reach[s])
                    out[a].push_back(static_cast<std::uint8_t>(s));
        }
        return out;
    }();
    return table;
}

constexpr int kInf = 1 << 20;

std::vector<int> truncated_minima(TrailType type) {
    const auto& sp = spreads();
    std::vector<int> result(kMaxTruncatedRounds + 1, kInf);
    result[0] = 0;

    if (type == TrailType::linear) {
        // Cost follows the F-half mask pattern only; a zero pattern is a
        // valid nonzero trail when the XOR-half mask is nonzero.
        std::array<int, 256> g{};
        for (int m = 1; m <= kMaxTruncatedRounds; ++m) {
            std::array<int, 256> ng{};
            for (unsigned a = 0; a < 256; ++a) {
                int best = kInf;
                for (std::uint8_t t : sp[a])
                    best = std::min(best, g[t]);
                ng[a] = std::popcount(a) + best;
            }
            g = ng;
            result[m] = *std::min_element(g.begin(), g.end());
        }
        return result;
    }

    // g[A] = min cost of the remaining rounds from F-half activity A, for a
    // fixed XOR-half activity R. h[X][F] = min over s subset of F of g[X | s].
    std::vector<int> h(256 * 256);
    for (unsigned rpat = 0; rpat < 256; ++rpat) {
        std::array<int, 256> g{};
        for (int m = 1; m <= kMaxTruncatedRounds; ++m) {
            for (unsigned x = 0; x < 256; ++x)
                h[x * 256] = g[x];
            for (unsigned f = 1; f < 256; ++f) {
                if ((f & ~rpat) != 0)
                    continue;
                const unsigned low = f & (~f + 1);
                for (unsigned x = 0; x < 256; ++x)
                    h[x * 256 + f] = std::min(h[x * 256 + (f ^ low)], h[(x | low) * 256 + (f ^ low)]);
            }
            std::array<int, 256> ng{};
            for (unsigned a = 0; a < 256; ++a) {
                int best = kInf;
                for (std::uint8_t t : sp[a]) {
                    const unsigned lo = t ^ rpat;
                    const unsigned free = t & rpat;
                    best = std::min(best, h[lo * 256 + free]);
                }
                ng[a] = std::popcount(a) + best;
            }
            g = ng;
            int best_start = kInf;
            for (unsigned a = (rpat == 0 ? 1 : 0); a < 256; ++a)
                best_start = std::min(best_start, g[a]);
            result[m] = std::min(result[m], best_start);
        }
    }
    return result;
}

const std::vector<int>& truncated_table(TrailType type) {
    static std::mutex mu;
    static std::map<TrailType, std::vector<int>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(type);
    if (it == cache.end())
        it = cache.emplace(type, truncated_minima(type)).first;
    return it->second;
}

}  // namespace

TrailResult min_active_sboxes(int rounds, TrailType type, SearchMode mode,
                              const ConventionProfile& /*profile*/, const SearchOptions& options) {
    const int limit = mode == SearchMode::exact_bitlevel ? kMaxExactRounds : kMaxTruncatedRounds;
    if (rounds < 1 || rounds > limit)
        throw std::invalid_argument("rounds must be in [1, " + std::to_string(limit) + "] for " +
                                    std::string(to_string(mode)) + " mode");
    const auto start = Clock::now();
    TrailResult res;
    res.rounds = rounds;
    res.trail_type = type;
    res.mode = mode;

    if (mode == SearchMode::truncated_nibble) {
        res.min_active = truncated_table(type)[rounds];
        res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return res;
    }

    const bool has_deadline = options.time_budget.count() > 0;
    ExactSearch search(type, start + options.time_budget, has_deadline);
    {
        std::lock_guard lock(g_bounds_mutex);
        search.seed_bounds(g_bounds[type]);
    }
    int lower = 0;
    auto witness = search.solve(rounds, &lower);
    {
        std::lock_guard lock(g_bounds_mutex);
        auto& known = g_bounds[type];
        if (search.bounds().size() > known.size())
            known = search.bounds();
    }
    res.nodes = search.nodes();
    if (!witness) {
        res.status = SearchStatus::bound_only;
        res.min_active = lower;
    } else {
        res.min_active = search.bounds()[rounds];
        res.witness = std::move(*witness);
        const TrailRound& last = res.witness.back();
        const HalfWord32 t = rotl32(last.sbox_out, kF1Rotation);
        if (type == TrailType::differential) {
            res.final_left = t ^ last.right;
            res.final_right = last.right;
        } else {
            res.final_left = t;
            res.final_right = last.right ^ t;
        }
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return res;
}

namespace {

int parity32(HalfWord32 x) { return std::popcount(x) & 1; }

// Concrete pair replay: pick per-nibble values realising each transition and
// push both members of the pair through round_forward with the same key.
std::string replay_differential_round(const TrailRound& rd, HalfWord32 exp_left, HalfWord32 exp_right,
                                      int index) {
    const auto& s = kCanonicalSBoxTable;
    HalfWord32 l = 0;
    for (int n = 0; n < 8; ++n) {
        const unsigned din = (rd.left >> (4 * n)) & 0xF;
        const unsigned dout = (rd.sbox_out >> (4 * n)) & 0xF;
        int chosen = -1;
        for (int x = 0; x < 16 && chosen < 0; ++x)
            if (static_cast<unsigned>(s[x] ^ s[x ^ din]) == dout)
                chosen = x;
        if (chosen < 0)
            return "round " + std::to_string(index + 1) + ": nibble " + std::to_string(n) +
                   " transition has zero DDT count";
        l |= static_cast<HalfWord32>(chosen) << (4 * n);
    }
    const HalfWord32 r = 0x9E3779B9U, k = 0x7F4A7C15U;
    const auto [l1, r1] = round_forward(l, r, k);
    const auto [l2, r2] = round_forward(l ^ rd.left, r ^ rd.right, k);
    if ((l1 ^ l2) != exp_left || (r1 ^ r2) != exp_right)
        return "round " + std::to_string(index + 1) + ": concrete pair does not follow the trail";
    return {};
}

// The linear relation a.l ^ b.r ^ a'.l' ^ b'.r' must not depend on r: only the
// S-layer part may be approximate.
std::string replay_linear_round(const TrailRound& rd, HalfWord32 out_left, HalfWord32 out_right,
                                int index) {
    const HalfWord32 k = 0x2545F491U;
    for (HalfWord32 l : {0x00000000U, 0x12345678U, 0xDEADBEEFU}) {
        int first = -1;
        for (HalfWord32 r : {0x00000000U, 0xFFFFFFFFU, 0x0F1E2D3CU, 0xA5A5A5A5U}) {
            const auto [l2, r2] = round_forward(l, r, k);
            const int v = parity32(rd.left & l) ^ parity32(rd.right & r) ^ parity32(out_left & l2) ^
                          parity32(out_right & r2);
            if (first < 0)
                first = v;
            else if (v != first)
                return "round " + std::to_string(index + 1) +
                       ": XOR-half masks do not cancel through round_forward";
        }
    }
    return {};
}

}  // namespace

std::string verify_witness(const TrailResult& res) {
    if (res.mode != SearchMode::exact_bitlevel)
        return "truncated results carry no witness";
    if (res.status != SearchStatus::exact)
        return "search did not complete";
    if (static_cast<int>(res.witness.size()) != res.rounds)
        return "witness length differs from round count";
    const bool diff = res.trail_type == TrailType::differential;
    const DDT ddt = build_ddt(SBox4::canonical());
    const LAT lat = build_lat(SBox4::canonical());
    if (res.witness[0].left == 0 && res.witness[0].right == 0)
        return "trail starts from the zero state";
    int total = 0;
    for (int i = 0; i < res.rounds; ++i) {
        const TrailRound& rd = res.witness[i];
        if (rd.active != active_nibbles(rd.left))
            return "round " + std::to_string(i + 1) + ": active count mismatch";
        total += rd.active;
        for (int n = 0; n < 8; ++n) {
            const unsigned a = (rd.left >> (4 * n)) & 0xF;
            const unsigned b = (rd.sbox_out >> (4 * n)) & 0xF;
            if ((a == 0) != (b == 0))
                return "round " + std::to_string(i + 1) + ": S-box activity mismatch";
            if (a != 0 && (diff ? ddt.counts[a][b] : lat.entries[a][b]) == 0)
                return "round " + std::to_string(i + 1) + ": impossible S-box transition";
        }
        const HalfWord32 t = rotl32(rd.sbox_out, kF1Rotation);
        const HalfWord32 nl = diff ? t ^ rd.right : t;
        const HalfWord32 nr = diff ? rd.right : rd.right ^ t;
        const bool last = i + 1 == res.rounds;
        const HalfWord32 el = last ? res.final_left : res.witness[i + 1].left;
        const HalfWord32 er = last ? res.final_right : res.witness[i + 1].right;
        if (nl != el || nr != er)
            return "round " + std::to_string(i + 1) + ": propagation does not chain";
        const std::string err = diff ? replay_differential_round(rd, el, er, i)
                                     : replay_linear_round(rd, el, er, i);
        if (!err.empty())
            return err;
    }
    if (total != res.min_active)
        return "witness cost " + std::to_string(total) + " differs from reported minimum";
    return {};
}

}  // namespace lici2::analysis
