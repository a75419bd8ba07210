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

#include "lici2/datagram/frame.hpp"

#include <string>

namespace lici2::datagram {

std::string_view to_string(FrameErrc e) noexcept {
    switch (e) {
    case FrameErrc::TagMismatch: return "TagMismatch";
    case FrameErrc::Truncated: return "Truncated";
    case FrameErrc::BadVersion: return "BadVersion";
    case FrameErrc::OversizePayload: return "OversizePayload";
    case FrameErrc::LengthMismatch: return "LengthMismatch";
    case FrameErrc::NonceReuse: return "NonceReuse";
    case FrameErrc::ReplayDetected: return "ReplayDetected";
    }
    return "Unknown";
}

namespace {

void put16(Bytes& b, std::uint16_t v) {
    b.push_back(static_cast<std::uint8_t>(v >> 8));
    b.push_back(static_cast<std::uint8_t>(v));
}

void put32(Bytes& b, std::uint32_t v) {
    put16(b, static_cast<std::uint16_t>(v >> 16));
    put16(b, static_cast<std::uint16_t>(v));
}

std::uint16_t get16(const std::uint8_t* p) { return static_cast<std::uint16_t>(p[0] << 8 | p[1]); }

std::uint32_t get32(const std::uint8_t* p) {
    return static_cast<std::uint32_t>(get16(p)) << 16 | get16(p + 2);
}

[[noreturn]] void fail(FrameErrc code, const std::string& what) { throw FrameError(code, what); }

}  // namespace

Bytes frame_encode(std::span<const std::uint8_t> plaintext, std::uint16_t src, std::uint16_t dst,
                   std::uint32_t seq, const LinkKeys& keys, const ConventionProfile& profile,
                   std::uint8_t flags, std::size_t max_payload) {
    if (flags > 0xF)
        throw std::invalid_argument("frame flags are 4 bits");
    if (plaintext.size() > max_payload || plaintext.size() > 0xFFFF)
        fail(FrameErrc::OversizePayload, "payload of " + std::to_string(plaintext.size()) +
                                             " bytes exceeds the " + std::to_string(max_payload) +
                                             "-byte cap");
    Bytes out;
    out.reserve(encoded_size(plaintext.size()));
    out.push_back(static_cast<std::uint8_t>(kFrameVersion << 4 | flags));
    out.push_back(0);
    put16(out, src);
    put16(out, dst);
    put32(out, seq);
    put16(out, static_cast<std::uint16_t>(plaintext.size()));
    const Bytes ct = ctr_encrypt(plaintext, keys.enc_key, seq, profile);
    out.insert(out.end(), ct.begin(), ct.end());
    const std::uint64_t tag = cbc_mac_tag(out, keys.mac_key, profile);
    for (int i = 7; i >= 0; --i)
        out.push_back(static_cast<std::uint8_t>(tag >> (8 * i)));
    return out;
}

DecodedFrame frame_decode(std::span<const std::uint8_t> frame, const LinkKeys& keys,
                          const ConventionProfile& profile, std::size_t max_payload) {
    if (frame.size() < kHeaderSize)
        fail(FrameErrc::Truncated, "frame shorter than its 12-byte header");
    FrameHeader h;
    h.version = frame[0] >> 4;
    h.flags = frame[0] & 0xF;
    if (h.version != kFrameVersion)
        fail(FrameErrc::BadVersion, "unsupported frame version " + std::to_string(h.version));
    if (frame[1] != 0)
        fail(FrameErrc::BadVersion, "reserved header byte is nonzero");
    h.src_id = get16(&frame[2]);
    h.dst_id = get16(&frame[4]);
    h.seq_nonce = get32(&frame[6]);
    h.payload_len = get16(&frame[10]);
    if (h.payload_len > max_payload)
        fail(FrameErrc::OversizePayload, "declared payload of " + std::to_string(h.payload_len) +
                                             " bytes exceeds the cap");
    const std::size_t want = encoded_size(h.payload_len);
    if (frame.size() < want)
        fail(FrameErrc::Truncated, "frame holds " + std::to_string(frame.size()) + " of " +
                                       std::to_string(want) + " bytes");
    if (frame.size() > want)
        fail(FrameErrc::LengthMismatch, "trailing bytes after the tag");

    const auto body = frame.first(kHeaderSize + h.payload_len);
    std::uint64_t tag = 0;
    for (std::size_t i = 0; i < kTagSize; ++i)
        tag = (tag << 8) | frame[kHeaderSize + h.payload_len + i];
    if (cbc_mac_tag(body, keys.mac_key, profile) != tag)
        fail(FrameErrc::TagMismatch, "authentication tag mismatch");
    return {h, ctr_decrypt(body.subspan(kHeaderSize), keys.enc_key, h.seq_nonce, profile)};
}

Bytes SenderSession::encode(std::span<const std::uint8_t> plaintext, std::uint32_t seq) {
    if (used_.contains(seq))
        fail(FrameErrc::NonceReuse, "sequence number " + std::to_string(seq) + " already used");
    Bytes out = frame_encode(plaintext, src_, dst_, seq, keys_, profile_);
    used_.insert(seq);
    if (seq >= next_seq_)
        next_seq_ = seq + 1;
    return out;
}

Bytes SenderSession::encode_next(std::span<const std::uint8_t> plaintext, std::uint32_t* seq_out) {
    while (used_.contains(next_seq_))
        ++next_seq_;
    const std::uint32_t seq = next_seq_;
    Bytes out = encode(plaintext, seq);
    if (seq_out)
        *seq_out = seq;
    return out;
}

DecodedFrame ReceiverSession::accept(std::span<const std::uint8_t> frame) {
    DecodedFrame f = frame_decode(frame, keys_, profile_);
    if (seen_any_ && f.header.seq_nonce <= last_seq_)
        fail(FrameErrc::ReplayDetected, "sequence number " + std::to_string(f.header.seq_nonce) +
                                            " not above last accepted " + std::to_string(last_seq_));
    seen_any_ = true;
    last_seq_ = f.header.seq_nonce;
    return f;
}

}  // namespace lici2::datagram
