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

#include "lici2/analysis/tables.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace lici2::analysis {

int DDT::max_nontrivial() const noexcept {
    int m = 0;
    for (int a = 1; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            m = std::max(m, counts[a][b]);
    return m;
}

bool DDT::satisfies_invariants() const noexcept {
    if (counts[0][0] != 16)
        return false;
    for (int a = 0; a < 16; ++a) {
        int sum = 0;
        for (int b = 0; b < 16; ++b) {
            if (counts[a][b] < 0 || counts[a][b] % 2 != 0)
                return false;
            if (a == 0 && b != 0 && counts[a][b] != 0)
                return false;
            sum += counts[a][b];
        }
        if (sum != 16)
            return false;
    }
    return true;
}

int LAT::max_nontrivial_abs() const noexcept {
    int m = 0;
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b)
            if (a != 0 || b != 0)
                m = std::max(m, std::abs(entries[a][b]));
    return m;
}

bool LAT::satisfies_invariants() const noexcept {
    if (entries[0][0] != 8)
        return false;
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            if (entries[a][b] % 2 != 0)
                return false;
            if ((a == 0) != (b == 0) && entries[a][b] != 0)
                return false;
        }
    return true;
}

DDT build_ddt(const SBox4& s) {
    if (!s.is_permutation())
        throw std::invalid_argument("DDT requires a bijective S-box");
    DDT d;
    for (int din = 0; din < 16; ++din)
        for (int x = 0; x < 16; ++x)
            ++d.counts[din][s(x) ^ s(x ^ din)];
    return d;
}

LAT build_lat(const SBox4& s) {
    if (!s.is_permutation())
        throw std::invalid_argument("LAT requires a bijective S-box");
    LAT l;
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) {
            int agree = 0;
            for (int x = 0; x < 16; ++x)
                agree += (std::popcount(static_cast<unsigned>(a & x)) & 1) ==
                         (std::popcount(static_cast<unsigned>(b & s(x))) & 1);
            l.entries[a][b] = agree - 8;
        }
    return l;
}

namespace {

template <typename Matrix>
std::string render_matrix(const Matrix& m, const char* corner) {
    std::string out;
    char cell[8];
    std::snprintf(cell, sizeof cell, "%4s", corner);
    out += cell;
    for (int b = 0; b < 16; ++b) {
        std::snprintf(cell, sizeof cell, "%4X", b);
        out += cell;
    }
    out += '\n';
    for (int a = 0; a < 16; ++a) {
        std::snprintf(cell, sizeof cell, "%4X", a);
        out += cell;
        for (int b = 0; b < 16; ++b) {
            std::snprintf(cell, sizeof cell, "%4d", m[a][b]);
            out += cell;
        }
        out += '\n';
    }
    return out;
}

}  // namespace

std::string render(const DDT& ddt) { return render_matrix(ddt.counts, "in"); }

std::string render(const LAT& lat) {
    return render_matrix(lat.entries, "a\\b") +
           "entries are #{a.x = b.S(x)} - 8; bias = |entry| / 16\n";
}

}  // namespace lici2::analysis
