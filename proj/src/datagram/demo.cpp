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

#include "lici2/datagram/demo.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lici2::datagram {

namespace {

class MemoryChannel final : public Channel {
public:
    void send(const Bytes& d) override { queue_.push_back(d); }
    std::optional<Bytes> receive() override {
        if (queue_.empty())
            return std::nullopt;
        Bytes d = std::move(queue_.front());
        queue_.pop_front();
        return d;
    }

private:
    std::deque<Bytes> queue_;
};

class Socket {
public:
    Socket() : fd_(::socket(AF_INET, SOCK_DGRAM, 0)) {
        if (fd_ < 0)
            throw std::runtime_error(std::string("socket: ") + std::strerror(errno));
        sockaddr_in addr{};
        addr.sin_family = AF_INET;
        addr.sin_addr.s_addr = htonl(INADDR_LOOPBACK);
        addr.sin_port = 0;
        if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof addr) != 0)
            throw std::runtime_error(std::string("bind: ") + std::strerror(errno));
        timeval tv{1, 0};
        ::setsockopt(fd_, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
        socklen_t len = sizeof addr_;
        ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr_), &len);
    }
    ~Socket() {
        if (fd_ >= 0)
            ::close(fd_);
    }
    Socket(const Socket&) = delete;
    Socket& operator=(const Socket&) = delete;

    int fd() const { return fd_; }
    const sockaddr_in& address() const { return addr_; }

private:
    int fd_;
    sockaddr_in addr_{};
};

// One frame per datagram, sent from one socket to the other.
class UdpChannel final : public Channel {
public:
    UdpChannel(std::shared_ptr<Socket> from, std::shared_ptr<Socket> to)
        : from_(std::move(from)), to_(std::move(to)) {}

    void send(const Bytes& d) override {
        const auto& dst = to_->address();
        const ssize_t n = ::sendto(from_->fd(), d.data(), d.size(), 0,
                                   reinterpret_cast<const sockaddr*>(&dst), sizeof dst);
        if (n != static_cast<ssize_t>(d.size()))
            throw std::runtime_error(std::string("sendto: ") + std::strerror(errno));
    }

    std::optional<Bytes> receive() override {
        Bytes buf(65536);
        const ssize_t n = ::recv(to_->fd(), buf.data(), buf.size(), 0);
        if (n < 0)
            return std::nullopt;
        buf.resize(static_cast<std::size_t>(n));
        return buf;
    }

private:
    std::shared_ptr<Socket> from_, to_;
};

// Ack datagram: status byte (0 = accepted) then the 4-byte seq.
Bytes make_ack(bool ok, std::uint32_t seq) {
    return {static_cast<std::uint8_t>(ok ? 0 : 1), static_cast<std::uint8_t>(seq >> 24),
            static_cast<std::uint8_t>(seq >> 16), static_cast<std::uint8_t>(seq >> 8),
            static_cast<std::uint8_t>(seq)};
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ChannelPair make_channels(TransportKind kind) {
    if (kind == TransportKind::in_memory)
        return {std::make_unique<MemoryChannel>(), std::make_unique<MemoryChannel>()};
    auto a = std::make_shared<Socket>();
    auto b = std::make_shared<Socket>();
    return {std::make_unique<UdpChannel>(a, b), std::make_unique<UdpChannel>(b, a)};
}

std::vector<ScriptStep> parse_script(const std::string& text) {
    std::vector<ScriptStep> steps;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#')
            continue;
        const auto sp = line.find(' ');
        const std::string verb = line.substr(0, sp);
        const std::string rest = sp == std::string::npos ? "" : line.substr(sp + 1);
        ScriptStep st;
        if (verb == "send") {
            st.action = ScriptStep::Action::send;
            st.text = rest;
        } else if (verb == "corrupt") {
            st.action = ScriptStep::Action::corrupt;
            st.text = rest;
        } else if (verb == "replay") {
            st.action = ScriptStep::Action::replay;
            try {
                st.ref = std::stoi(rest);
            } catch (const std::exception&) {
                throw std::invalid_argument("replay needs a step number: '" + line + "'");
            }
            if (st.ref < 1 || st.ref > static_cast<int>(steps.size()))
                throw std::invalid_argument("replay refers to a step that has not run: '" + line + "'");
            if (steps[st.ref - 1].action == ScriptStep::Action::replay)
                throw std::invalid_argument("replay must refer to a send or corrupt step");
        } else {
            throw std::invalid_argument("unknown script verb '" + verb + "'");
        }
        steps.push_back(std::move(st));
    }
    return steps;
}

std::string Transcript::to_json_lines() const {
    std::string out = nlohmann::json{{"event", "start"}, {"transport", transport}}.dump() + "\n";
    for (const TranscriptEntry& e : entries) {
        nlohmann::json j{{"event", "frame"},   {"step", e.step},
                         {"action", e.action}, {"seq", e.seq},
                         {"payload_bytes", e.payload_bytes}, {"frame_bytes", e.frame_bytes},
                         {"verdict", e.verdict}, {"acked", e.acked}};
        if (e.verdict == "delivered")
            j["received"] = e.received;
        out += j.dump() + "\n";
    }
    out += nlohmann::json{{"event", "summary"}, {"delivered", delivered}, {"rejected", rejected}}.dump() +
           "\n";
    return out;
}

Transcript demo_nodes(TransportKind transport, const std::vector<ScriptStep>& script,
                      const LinkKeys& keys, const ConventionProfile& profile) {
    Transcript tr;
    tr.transport = transport == TransportKind::in_memory ? "in_memory" : "udp_datagram";
    constexpr std::uint16_t kNodeA = 0x000A, kNodeB = 0x000B;

    ChannelPair ch;
    try {
        ch = make_channels(transport);
    } catch (const std::exception& ex) {
        for (std::size_t i = 0; i < script.size(); ++i) {
            tr.entries.push_back({static_cast<int>(i + 1), "setup", 0, 0, 0,
                                  std::string("TransportError: ") + ex.what(), "", false});
            ++tr.rejected;
        }
        return tr;
    }

    SenderSession node_a(keys, profile, kNodeA, kNodeB);
    ReceiverSession node_b(keys, profile);
    std::map<int, std::pair<Bytes, std::uint32_t>> sent;  // step -> (datagram, seq)

    for (std::size_t i = 0; i < script.size(); ++i) {
        const ScriptStep& st = script[i];
        TranscriptEntry e;
        e.step = static_cast<int>(i + 1);
        Bytes datagram;
        try {
            switch (st.action) {
            case ScriptStep::Action::send:
            case ScriptStep::Action::corrupt: {
                e.action = st.action == ScriptStep::Action::send ? "send" : "corrupt";
                const Bytes msg(st.text.begin(), st.text.end());
                datagram = node_a.encode_next(msg, &e.seq);
                sent[e.step] = {datagram, e.seq};
                e.payload_bytes = msg.size();
                if (st.action == ScriptStep::Action::corrupt)
                    datagram[kHeaderSize + msg.size() / 2] ^= 0x01;
                break;
            }
            case ScriptStep::Action::replay: {
                e.action = "replay";
                const auto it = sent.find(st.ref);
                if (it == sent.end())
                    throw std::invalid_argument("replay target never sent");
                datagram = it->second.first;
                e.seq = it->second.second;
                e.payload_bytes = datagram.size() - kHeaderSize - kTagSize;
                break;
            }
            }
            e.frame_bytes = datagram.size();
            ch.a_to_b->send(datagram);

            const auto got = ch.a_to_b->receive();
            if (!got) {
                e.verdict = "TransportError: datagram lost";
            } else {
                try {
                    const DecodedFrame f = node_b.accept(*got);
                    e.verdict = "delivered";
                    e.received.assign(f.plaintext.begin(), f.plaintext.end());
                    ch.b_to_a->send(make_ack(true, f.header.seq_nonce));
                } catch (const FrameError& fe) {
                    e.verdict = std::string(to_string(fe.code()));
                    ch.b_to_a->send(make_ack(false, e.seq));
                }
                const auto ack = ch.b_to_a->receive();
                e.acked = ack && ack->size() == 5 && (*ack)[0] == 0;
            }
        } catch (const FrameError& fe) {
            e.verdict = std::string(to_string(fe.code()));
        } catch (const std::exception& ex) {
            e.verdict = std::string("TransportError: ") + ex.what();
        }
        if (e.verdict == "delivered")
            ++tr.delivered;
        else
            ++tr.rejected;
        tr.entries.push_back(std::move(e));
    }
    return tr;
}

}  // namespace lici2::datagram
