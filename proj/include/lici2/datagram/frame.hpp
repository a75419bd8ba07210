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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include "lici2/datagram/mode.hpp"

namespace lici2::datagram {

// Wire format, all integers big-endian:
//
//   offset size
//   0      1    version (high nibble, = 1) | flags (low nibble)
//   1      1    reserved, must be 0
//   2      2    src_id
//   4      2    dst_id
//   6      4    seq_nonce (CTR nonce)
//   10     2    payload_len
//   12     n    ciphertext
//   12+n   8    CBC-MAC tag over bytes [0, 12+n)

inline constexpr std::size_t kHeaderSize = 12;
inline constexpr std::size_t kTagSize = 8;
inline constexpr std::size_t kDefaultMaxPayload = 1024;
inline constexpr std::uint8_t kFrameVersion = 1;

enum class FrameErrc {
    TagMismatch,
    Truncated,        // shorter than the header or than header.payload_len implies
    BadVersion,       // unknown version or nonzero reserved byte
    OversizePayload,  // payload_len above the configured cap
    LengthMismatch,   // trailing bytes after the tag
    NonceReuse,       // encoder asked to reuse a sequence number
    ReplayDetected,   // authentic frame with a stale sequence number
};

std::string_view to_string(FrameErrc e) noexcept;

class FrameError : public std::runtime_error {
public:
    FrameError(FrameErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    FrameErrc code() const noexcept { return code_; }

private:
    FrameErrc code_;
};

struct FrameHeader {
    std::uint8_t version = kFrameVersion;
    std::uint8_t flags = 0;  // 4 bits
    std::uint16_t src_id = 0;
    std::uint16_t dst_id = 0;
    std::uint32_t seq_nonce = 0;
    std::uint16_t payload_len = 0;
};

struct DecodedFrame {
    FrameHeader header;
    Bytes plaintext;
};

constexpr std::size_t encoded_size(std::size_t payload_len) noexcept {
    return kHeaderSize + payload_len + kTagSize;
}

/// Throws FrameError(OversizePayload) above max_payload, std::invalid_argument
/// for flags above 0xF.
Bytes frame_encode(std::span<const std::uint8_t> plaintext, std::uint16_t src, std::uint16_t dst,
                   std::uint32_t seq, const LinkKeys& keys, const ConventionProfile& profile,
                   std::uint8_t flags = 0, std::size_t max_payload = kDefaultMaxPayload);

/// Verifies the tag before decrypting. Throws FrameError.
DecodedFrame frame_decode(std::span<const std::uint8_t> frame, const LinkKeys& keys,
                          const ConventionProfile& profile,
                          std::size_t max_payload = kDefaultMaxPayload);

/// Sending side of a link: refuses to encode two frames with the same seq
/// under one key pair (the seq is the CTR nonce).
class SenderSession {
public:
    SenderSession(LinkKeys keys, ConventionProfile profile, std::uint16_t src, std::uint16_t dst)
        : keys_(keys), profile_(profile), src_(src), dst_(dst) {}

    /// Throws FrameError(NonceReuse) for a seq already used.
    Bytes encode(std::span<const std::uint8_t> plaintext, std::uint32_t seq);
    /// Encodes with the next unused seq (starting at 1).
    Bytes encode_next(std::span<const std::uint8_t> plaintext, std::uint32_t* seq_out = nullptr);

private:
    LinkKeys keys_;
    ConventionProfile profile_;
    std::uint16_t src_, dst_;
    std::uint32_t next_seq_ = 1;
    std::unordered_set<std::uint32_t> used_;
};

/// Receiving side: accepts authentic frames whose seq is strictly above the
/// last accepted one.
class ReceiverSession {
public:
    ReceiverSession(LinkKeys keys, ConventionProfile profile) : keys_(keys), profile_(profile) {}

    /// Throws FrameError (including ReplayDetected). Rejected frames leave
    /// the counter untouched.
    DecodedFrame accept(std::span<const std::uint8_t> frame);

private:
    LinkKeys keys_;
    ConventionProfile profile_;
    bool seen_any_ = false;
    std::uint32_t last_seq_ = 0;
};

}  // namespace lici2::datagram
