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

#include "lici2/profile.hpp"

#include <stdexcept>
#include <vector>

namespace lici2 {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

[[noreturn]] void bad(std::string_view field, std::string_view token) {
    throw std::invalid_argument("bad profile " + std::string(field) + " token '" +
                                std::string(token) + "'");
}

}  // namespace

ConventionProfile ConventionProfile::parse(std::string_view text) {
    if (text == "default")
        return default_profile();
    if (text == "verified")
        return verified();
    const auto parts = split(text, '/');
    if (parts.size() != 5)
        throw std::invalid_argument("profile must have 5 '/'-separated fields, e.g. msb/LR/w127/upd/rc1");
    ConventionProfile p;

    if (parts[0] == "msb") p.f_half = FHalf::msb_half;
    else if (parts[0] == "lsb") p.f_half = FHalf::lsb_half;
    else bad("f_half", parts[0]);

    if (parts[1] == "LR") p.output_order = OutputOrder::left_then_right;
    else if (parts[1] == "RL") p.output_order = OutputOrder::right_then_left;
    else bad("output_order", parts[1]);

    if (parts[2] == "w127") p.rk_window = RoundKeyWindow::k127_96;
    else if (parts[2] == "w95") p.rk_window = RoundKeyWindow::k95_64;
    else if (parts[2] == "w63") p.rk_window = RoundKeyWindow::k63_32;
    else if (parts[2] == "w31") p.rk_window = RoundKeyWindow::k31_0;
    else bad("rk_window", parts[2]);

    if (parts[3] == "upd") p.rk_timing = RoundKeyTiming::update_then_extract;
    else if (parts[3] == "ext") p.rk_timing = RoundKeyTiming::extract_then_update;
    else bad("rk_timing", parts[3]);

    if (parts[4] == "rc1") p.rc_start = 1;
    else if (parts[4] == "rc0") p.rc_start = 0;
    else bad("rc_start", parts[4]);

    return p;
}

std::string ConventionProfile::to_string() const {
    std::string s = f_half == FHalf::msb_half ? "msb/" : "lsb/";
    s += output_order == OutputOrder::left_then_right ? "LR/" : "RL/";
    switch (rk_window) {
    case RoundKeyWindow::k127_96: s += "w127/"; break;
    case RoundKeyWindow::k95_64: s += "w95/"; break;
    case RoundKeyWindow::k63_32: s += "w63/"; break;
    case RoundKeyWindow::k31_0: s += "w31/"; break;
    }
    s += rk_timing == RoundKeyTiming::update_then_extract ? "upd/" : "ext/";
    s += rc_start == 1 ? "rc1" : "rc0";
    return s;
}

const std::array<ConventionProfile, kProfileCount>& all_profiles() {
    static const auto grid = [] {
        std::array<ConventionProfile, kProfileCount> g{};
        std::size_t i = 0;
        for (FHalf h : {FHalf::msb_half, FHalf::lsb_half})
            for (OutputOrder o : {OutputOrder::left_then_right, OutputOrder::right_then_left})
                for (RoundKeyWindow w : {RoundKeyWindow::k127_96, RoundKeyWindow::k95_64,
                                         RoundKeyWindow::k63_32, RoundKeyWindow::k31_0})
                    for (RoundKeyTiming t : {RoundKeyTiming::update_then_extract,
                                             RoundKeyTiming::extract_then_update})
                        for (int rc : {1, 0})
                            g[i++] = ConventionProfile{h, o, w, t, rc};
        return g;
    }();
    return grid;
}

}  // namespace lici2
