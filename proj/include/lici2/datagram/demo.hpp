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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lici2/datagram/frame.hpp"

namespace lici2::datagram {

enum class TransportKind { in_memory, udp_datagram };

/// One-directional datagram pipe.
class Channel {
public:
    virtual ~Channel() = default;
    /// Throws std::runtime_error on transport failure.
    virtual void send(const Bytes& datagram) = 0;
    /// nullopt when nothing arrives (in-memory: queue empty; UDP: timeout).
    virtual std::optional<Bytes> receive() = 0;
};

struct ChannelPair {
    std::unique_ptr<Channel> a_to_b;
    std::unique_ptr<Channel> b_to_a;
};

/// Throws std::runtime_error if a UDP loopback socket cannot be set up.
ChannelPair make_channels(TransportKind kind);

/// Script lines (blank lines and '#' comments ignored):
///   send <text>       A encodes <text> with its next seq and sends it
///   replay <n>        A resends the datagram of step n (1-based) verbatim
///   corrupt <text>    like send, but one bit is flipped in transit
struct ScriptStep {
    enum class Action { send, replay, corrupt };
    Action action = Action::send;
    std::string text;
    int ref = 0;
};

/// Throws std::invalid_argument on an unknown verb or bad step reference.
std::vector<ScriptStep> parse_script(const std::string& text);

struct TranscriptEntry {
    int step = 0;
    std::string action;
    std::uint32_t seq = 0;
    std::size_t payload_bytes = 0;
    std::size_t frame_bytes = 0;
    std::string verdict;  // "delivered" or a FrameErrc / transport error name
    std::string received;  // decoded text when delivered
    bool acked = false;
};

struct Transcript {
    std::string transport;
    std::vector<TranscriptEntry> entries;
    int delivered = 0;
    int rejected = 0;

    /// One JSON object per line: a header line, one per frame, a summary.
    std::string to_json_lines() const;
};

/// Runs node A (sender) and node B (receiver) over the chosen transport.
/// Per-frame failures land in the transcript; nothing here throws on
/// malformed traffic.
Transcript demo_nodes(TransportKind transport, const std::vector<ScriptStep>& script,
                      const LinkKeys& keys, const ConventionProfile& profile);

}  // namespace lici2::datagram
