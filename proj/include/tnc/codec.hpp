#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tnc/core.hpp"
#include "tnc/cost.hpp"
#include "tnc/transform.hpp"

namespace tnc {

/// Decode-side failure; `section` names the part of the blob that failed
/// ("magic", "tag", "header", "payload", "trailer").
struct CodecError : std::runtime_error {
    std::string section;
    CodecError(std::string section_, const std::string& msg)
        : std::runtime_error(msg), section(std::move(section_)) {}
};

/// Bits needed to distinguish `count` code points (0 for count <= 1).
constexpr unsigned bit_width_for(std::uint64_t count) {
    return count <= 1 ? 0u : static_cast<unsigned>(std::bit_width(count - 1));
}

/// Fixed field widths for one stream. Each alphabet is widened by one code
/// point so the out-of-alphabet STOP marker is expressible:
///   node      ceil(log2(n + 1)),  code n  = stop
///   time      ceil(log2(t + 1)),  code t  = stop
///   endpoint  ceil(log2(t' + 1)), code t' = stop
struct FieldWidths {
    unsigned node = 0;
    unsigned time = 0;
    unsigned endpoint = 0;
};

inline FieldWidths field_widths(std::uint64_t n, std::uint64_t t, std::uint64_t t_prime) {
    return {bit_width_for(n + 1), bit_width_for(t + 1), bit_width_for(t_prime + 1)};
}

/// MSB-first bit accumulator; the final partial byte is zero-padded.
class BitWriter {
public:
    void write(std::uint64_t value, unsigned width) {
        for (unsigned k = width; k-- > 0;) push_bit((value >> k) & 1u);
    }
    std::uint64_t bit_count() const { return bits_; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> take_bytes() && { return std::move(bytes_); }

private:
    void push_bit(std::uint64_t bit) {
        if (bits_ % 8 == 0) bytes_.push_back(0);
        if (bit) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - bits_ % 8));
        ++bits_;
    }
    std::vector<std::uint8_t> bytes_;
    std::uint64_t bits_ = 0;
};

/// MSB-first reader over a padded byte buffer with an exact bit limit.
class BitReader {
public:
    BitReader(std::span<const std::uint8_t> bytes, std::uint64_t bit_limit)
        : bytes_(bytes), limit_(bit_limit) {
        if (bytes_.size() * 8 < limit_)
            throw CodecError("payload", "payload shorter than its declared bit length");
    }

    std::uint64_t read(unsigned width) {
        if (cursor_ + width > limit_)
            throw CodecError("payload", "truncated payload");
        std::uint64_t value = 0;
        for (unsigned k = 0; k < width; ++k) {
            const std::uint64_t byte = bytes_[cursor_ / 8];
            value = (value << 1) | ((byte >> (7 - cursor_ % 8)) & 1u);
            ++cursor_;
        }
        return value;
    }

    std::uint64_t cursor() const { return cursor_; }
    bool at_end() const { return cursor_ == limit_; }

private:
    std::span<const std::uint8_t> bytes_;
    std::uint64_t cursor_ = 0;
    std::uint64_t limit_ = 0;
};

/// A serialized dynamic network. On disk (all counts little-endian u64,
/// timestamps little-endian i64, labels length-prefixed UTF-8):
///
///   magic "TNC1" | tag u8 | n | labels... | t | times... |
///   [tag == ig: step | t' | endpoints...] |
///   payload_bit_length | payload bytes (MSB-first, zero-padded)
///
/// Dictionaries and counts live in the header; payload_bit_length covers the
/// payload only, so representation payloads stay comparable.
struct EncodedBlob {
    Repr tag = Repr::ls;
    NodeDictionary nodes;
    std::vector<Time> times;
    Time step = 0;                // ig only
    std::vector<Time> endpoints;  // ig only
    std::uint64_t payload_bit_length = 0;
    std::vector<std::uint8_t> payload;
};

/// Per-edge time-index lists, sorted by (u, v); index positions refer to
/// the stream's occupied-time list.
struct EdgeTimeList {
    NodeId u;
    NodeId v;
    std::vector<std::uint32_t> time_indices;  // ascending
};
std::vector<EdgeTimeList> edges_with_time_indices(const LinkStream& ls);

/// Per-snapshot edge lists in time order; pairs sorted within a snapshot.
struct Snapshot {
    std::uint32_t time_index;
    std::vector<std::pair<NodeId, NodeId>> pairs;
};
std::vector<Snapshot> snapshots_of(const LinkStream& ls);

/// Writes the payload bitstream for one representation. Sink needs
/// write(value, width). Shared between the encoder and the width-tally
/// oracle used in tests. `ig` is required for Repr::ig and ignored otherwise.
template <typename Sink>
void emit_payload(const LinkStream& ls, Repr tag, const IntervalGraph* ig, Sink& sink) {
    if (ls.empty()) return;
    const std::uint64_t n = ls.node_count();
    const std::uint64_t t = ls.time_count();
    const FieldWidths w = field_widths(n, t, ig != nullptr ? ig->endpoint_count() : 0);

    switch (tag) {
        case Repr::ls:
            // per edge: pair, its time indices, time-position stop
            for (const EdgeTimeList& edge : edges_with_time_indices(ls)) {
                sink.write(edge.u, w.node);
                sink.write(edge.v, w.node);
                for (std::uint32_t idx : edge.time_indices) sink.write(idx, w.time);
                sink.write(t, w.time);
            }
            break;

        case Repr::sn_m: {
            // edge directory, time directory, then the m-by-t presence matrix
            const std::vector<EdgeTimeList> edges = edges_with_time_indices(ls);
            for (const EdgeTimeList& edge : edges) {
                sink.write(edge.u, w.node);
                sink.write(edge.v, w.node);
            }
            for (std::uint64_t c = 0; c < t; ++c) sink.write(c, w.time);
            for (const EdgeTimeList& edge : edges) {
                std::size_t k = 0;
                for (std::uint64_t c = 0; c < t; ++c) {
                    const bool present =
                        k < edge.time_indices.size() && edge.time_indices[k] == c;
                    if (present) ++k;
                    sink.write(present ? 1 : 0, 1);
                }
            }
            break;
        }

        case Repr::sn_e:
            // per snapshot: time index, its pairs, node-position stop
            for (const Snapshot& snap : snapshots_of(ls)) {
                sink.write(snap.time_index, w.time);
                for (const auto& [u, v] : snap.pairs) {
                    sink.write(u, w.node);
                    sink.write(v, w.node);
                }
                sink.write(n, w.node);
            }
            break;

        case Repr::ig:
            // per edge: pair, (start, end) endpoint indices, endpoint stop
            for (const EdgeIntervals& edge : ig->edges()) {
                sink.write(edge.u, w.node);
                sink.write(edge.v, w.node);
                for (const Interval& iv : edge.spans) {
                    sink.write(ig->endpoint_index(iv.start), w.endpoint);
                    sink.write(ig->endpoint_index(iv.end), w.endpoint);
                }
                sink.write(ig->endpoint_count(), w.endpoint);
            }
            break;
    }
}

/// Serializes a stream under one representation. For Repr::ig, intervals are
/// built at `step`. payload_bit_length always equals
/// realized_length(params, tag).
EncodedBlob encode(const LinkStream& ls, Repr tag, Time step = 1);

/// Exact inverse of encode for every representation (for ig, after grid
/// expansion). Throws CodecError on malformed blobs.
LinkStream decode(const EncodedBlob& blob);

/// Closed-form payload length in bits, with W_n = ceil(log2(n+1)),
/// W_t = ceil(log2(t+1)), W' = ceil(log2(t'+1)):
///   ls    m*2W_n + e*W_t + m*W_t
///   sn_m  m*2W_n + t*W_t + t*m
///   sn_e  e*2W_n + t*W_t + t*W_n
///   ig    m*2W_n + 2i*W' + m*W'
std::uint64_t realized_length(const CostParams& p, Repr tag);

std::vector<std::uint8_t> serialize(const EncodedBlob& blob);
EncodedBlob deserialize(std::span<const std::uint8_t> bytes);

}  // namespace tnc
