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

#include "lici2/block.hpp"

#include <cstdio>
#include <stdexcept>

namespace lici2 {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

// Collects exactly `digits` hex digits, ignoring blanks and an optional 0x prefix.
std::string clean_hex(std::string_view text, std::size_t digits, const char* what) {
    if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X'))
        text.remove_prefix(2);
    std::string out;
    out.reserve(digits);
    for (char c : text) {
        if (c == ' ' || c == '_' || c == '\t')
            continue;
        if (hex_value(c) < 0)
            throw std::invalid_argument(std::string("invalid hex character in ") + what);
        out.push_back(c);
    }
    if (out.size() != digits)
        throw std::invalid_argument(std::string(what) + " must be " + std::to_string(digits) +
                                    " hex digits, got " + std::to_string(out.size()));
    return out;
}

std::uint64_t fold_hex(std::string_view digits) {
    std::uint64_t v = 0;
    for (char c : digits)
        v = (v << 4) | static_cast<std::uint64_t>(hex_value(c));
    return v;
}

}  // namespace

Block64 parse_block_hex(std::string_view text) {
    return Block64{fold_hex(clean_hex(text, 16, "block"))};
}

Key128 parse_key_hex(std::string_view text) {
    const std::string d = clean_hex(text, 32, "key");
    return Key128{fold_hex(std::string_view(d).substr(0, 16)), fold_hex(std::string_view(d).substr(16))};
}

std::string to_hex(Block64 b) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(b.bits));
    return buf;
}

std::string to_hex(Key128 k) {
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(k.hi),
                  static_cast<unsigned long long>(k.lo));
    return buf;
}

std::string to_hex32(HalfWord32 w) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08x", w);
    return buf;
}

}  // namespace lici2
