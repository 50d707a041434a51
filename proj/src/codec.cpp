#include "tnc/codec.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <utility>

namespace tnc {

namespace {

constexpr char kMagic[4] = {'T', 'N', 'C', '1'};

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t value) {
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<std::uint8_t>(value >> (8 * k)));
}

void put_i64(std::vector<std::uint8_t>& out, std::int64_t value) {
    put_u64(out, static_cast<std::uint64_t>(value));
}

// Bounds-checked little-endian byte reader for the blob header.
class ByteReader {
public:
    explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    std::uint8_t u8(const char* what) {
        need(1, what);
        return bytes_[pos_++];
    }

    std::uint64_t u64(const char* what) {
        need(8, what);
        std::uint64_t value = 0;
        for (int k = 0; k < 8; ++k)
            value |= static_cast<std::uint64_t>(bytes_[pos_ + k]) << (8 * k);
        pos_ += 8;
        return value;
    }

    std::int64_t i64(const char* what) { return static_cast<std::int64_t>(u64(what)); }

    std::span<const std::uint8_t> bytes(std::size_t count, const char* what) {
        need(count, what);
        auto view = bytes_.subspan(pos_, count);
        pos_ += count;
        return view;
    }

    std::size_t remaining() const { return bytes_.size() - pos_; }

private:
    void need(std::size_t count, const char* what) {
        if (bytes_.size() - pos_ < count)
            throw CodecError("header", std::string("truncated blob while reading ") + what);
    }

    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

LinkStream decode_ls(const EncodedBlob& blob, BitReader& reader, const FieldWidths& w) {
    const std::uint64_t n = blob.nodes.size();
    const std::uint64_t t = blob.times.size();
    std::vector<Event> events;
    while (!reader.at_end()) {
        const std::uint64_t u = reader.read(w.node);
        const std::uint64_t v = reader.read(w.node);
        if (u >= v || v >= n) throw CodecError("payload", "invalid node pair");
        for (;;) {
            const std::uint64_t idx = reader.read(w.time);
            if (idx == t) break;
            if (idx > t) throw CodecError("payload", "time index out of range");
            events.push_back(Event{blob.times[idx], static_cast<NodeId>(u),
                                   static_cast<NodeId>(v)});
        }
    }
    return LinkStream::from_events(blob.nodes, std::move(events));
}

LinkStream decode_sn_m(const EncodedBlob& blob, BitReader& reader, const FieldWidths& w,
                       std::uint64_t bit_length) {
    const std::uint64_t n = blob.nodes.size();
    const std::uint64_t t = blob.times.size();
    std::vector<Event> events;
    if (bit_length == 0) return LinkStream::from_events(blob.nodes, {});

    // bit_length = m*(2*W_n + t) + t*W_t determines the edge directory size.
    const std::uint64_t per_edge = 2 * static_cast<std::uint64_t>(w.node) + t;
    const std::uint64_t fixed = t * static_cast<std::uint64_t>(w.time);
    if (per_edge == 0 || bit_length < fixed || (bit_length - fixed) % per_edge != 0)
        throw CodecError("payload", "payload length inconsistent with matrix layout");
    const std::uint64_t m = (bit_length - fixed) / per_edge;

    std::vector<std::pair<NodeId, NodeId>> directory;
    directory.reserve(m);
    for (std::uint64_t r = 0; r < m; ++r) {
        const std::uint64_t u = reader.read(w.node);
        const std::uint64_t v = reader.read(w.node);
        if (u >= v || v >= n) throw CodecError("payload", "invalid node pair");
        directory.emplace_back(static_cast<NodeId>(u), static_cast<NodeId>(v));
    }
    for (std::uint64_t c = 0; c < t; ++c) {
        if (reader.read(w.time) >= t)
            throw CodecError("payload", "time index out of range");
    }
    for (const auto& [u, v] : directory)
        for (std::uint64_t c = 0; c < t; ++c)
            if (reader.read(1) != 0) events.push_back(Event{blob.times[c], u, v});

    return LinkStream::from_events(blob.nodes, std::move(events));
}

LinkStream decode_sn_e(const EncodedBlob& blob, BitReader& reader, const FieldWidths& w) {
    const std::uint64_t n = blob.nodes.size();
    const std::uint64_t t = blob.times.size();
    std::vector<Event> events;
    for (std::uint64_t s = 0; s < t; ++s) {
        const std::uint64_t idx = reader.read(w.time);
        if (idx >= t) throw CodecError("payload", "time index out of range");
        for (;;) {
            const std::uint64_t u = reader.read(w.node);
            if (u == n) break;
            const std::uint64_t v = reader.read(w.node);
            if (u >= v || v >= n) throw CodecError("payload", "invalid node pair");
            events.push_back(Event{blob.times[idx], static_cast<NodeId>(u),
                                   static_cast<NodeId>(v)});
        }
    }
    return LinkStream::from_events(blob.nodes, std::move(events));
}

LinkStream decode_ig(const EncodedBlob& blob, BitReader& reader, const FieldWidths& w) {
    const std::uint64_t n = blob.nodes.size();
    const std::uint64_t t_prime = blob.endpoints.size();
    if (blob.step <= 0 && !reader.at_end())
        throw CodecError("header", "interval blob without a positive grid step");
    std::vector<Event> events;
    while (!reader.at_end()) {
        const std::uint64_t u = reader.read(w.node);
        const std::uint64_t v = reader.read(w.node);
        if (u >= v || v >= n) throw CodecError("payload", "invalid node pair");
        for (;;) {
            const std::uint64_t s = reader.read(w.endpoint);
            if (s == t_prime) break;
            const std::uint64_t f = reader.read(w.endpoint);
            if (s > t_prime || f >= t_prime)
                throw CodecError("payload", "endpoint index out of range");
            const Time start = blob.endpoints[s];
            const Time end = blob.endpoints[f];
            if (start >= end || (end - start) % blob.step != 0)
                throw CodecError("payload", "malformed interval");
            for (Time x = start; x < end; x += blob.step)
                events.push_back(Event{x, static_cast<NodeId>(u), static_cast<NodeId>(v)});
        }
    }
    return LinkStream::from_events(blob.nodes, std::move(events));
}

}  // namespace

std::vector<EdgeTimeList> edges_with_time_indices(const LinkStream& ls) {
    std::map<std::pair<NodeId, NodeId>, std::vector<std::uint32_t>> grouped;
    for (const Event& ev : ls.events())
        grouped[{ev.u, ev.v}].push_back(static_cast<std::uint32_t>(ls.time_index(ev.time)));
    std::vector<EdgeTimeList> edges;
    edges.reserve(grouped.size());
    for (auto& [pair, indices] : grouped) {
        std::sort(indices.begin(), indices.end());
        edges.push_back(EdgeTimeList{pair.first, pair.second, std::move(indices)});
    }
    return edges;
}

std::vector<Snapshot> snapshots_of(const LinkStream& ls) {
    std::vector<Snapshot> snaps;
    // events are sorted by (time, u, v): one pass builds snapshots in order
    for (const Event& ev : ls.events()) {
        const auto idx = static_cast<std::uint32_t>(ls.time_index(ev.time));
        if (snaps.empty() || snaps.back().time_index != idx)
            snaps.push_back(Snapshot{idx, {}});
        snaps.back().pairs.emplace_back(ev.u, ev.v);
    }
    return snaps;
}

EncodedBlob encode(const LinkStream& ls, Repr tag, Time step) {
    EncodedBlob blob;
    blob.tag = tag;
    blob.nodes = ls.nodes();
    blob.times = ls.times();

    std::optional<IntervalGraph> ig;
    if (tag == Repr::ig) {
        ig = build_intervals(ls, step);
        blob.step = step;
        blob.endpoints = ig->endpoints();
    }

    BitWriter writer;
    emit_payload(ls, tag, ig ? &*ig : nullptr, writer);
    blob.payload_bit_length = writer.bit_count();
    blob.payload = std::move(writer).take_bytes();
    return blob;
}

LinkStream decode(const EncodedBlob& blob) {
    const FieldWidths w =
        field_widths(blob.nodes.size(), blob.times.size(), blob.endpoints.size());
    BitReader reader(blob.payload, blob.payload_bit_length);

    LinkStream ls;
    switch (blob.tag) {
        case Repr::ls: ls = decode_ls(blob, reader, w); break;
        case Repr::sn_m: ls = decode_sn_m(blob, reader, w, blob.payload_bit_length); break;
        case Repr::sn_e: ls = decode_sn_e(blob, reader, w); break;
        case Repr::ig: ls = decode_ig(blob, reader, w); break;
        default: throw CodecError("tag", "unknown representation tag");
    }
    if (!reader.at_end()) throw CodecError("payload", "trailing payload bits");
    return ls;
}

std::uint64_t realized_length(const CostParams& p, Repr tag) {
    const std::uint64_t w_node = bit_width_for(p.n + 1);
    const std::uint64_t w_time = bit_width_for(p.t + 1);
    const std::uint64_t w_endpoint = bit_width_for(p.t_prime + 1);
    switch (tag) {
        case Repr::ls: return p.m * 2 * w_node + p.e * w_time + p.m * w_time;
        case Repr::sn_m: return p.m * 2 * w_node + p.t * w_time + p.t * p.m;
        case Repr::sn_e: return p.e * 2 * w_node + p.t * w_time + p.t * w_node;
        case Repr::ig: return p.m * 2 * w_node + 2 * p.i * w_endpoint + p.m * w_endpoint;
    }
    throw std::invalid_argument("unknown representation tag");
}

std::vector<std::uint8_t> serialize(const EncodedBlob& blob) {
    std::vector<std::uint8_t> out;
    out.insert(out.end(), kMagic, kMagic + 4);
    out.push_back(static_cast<std::uint8_t>(blob.tag));

    put_u64(out, blob.nodes.size());
    for (const std::string& label : blob.nodes.labels()) {
        put_u64(out, label.size());
        out.insert(out.end(), label.begin(), label.end());
    }
    put_u64(out, blob.times.size());
    for (Time value : blob.times) put_i64(out, value);

    if (blob.tag == Repr::ig) {
        put_i64(out, blob.step);
        put_u64(out, blob.endpoints.size());
        for (Time value : blob.endpoints) put_i64(out, value);
    }

    put_u64(out, blob.payload_bit_length);
    out.insert(out.end(), blob.payload.begin(), blob.payload.end());
    return out;
}

EncodedBlob deserialize(std::span<const std::uint8_t> bytes) {
    ByteReader in(bytes);

    const auto magic = in.bytes(4, "magic");
    if (std::memcmp(magic.data(), kMagic, 4) != 0) throw CodecError("magic", "bad magic");

    const std::uint8_t tag_byte = in.u8("representation tag");
    if (tag_byte > static_cast<std::uint8_t>(Repr::ig))
        throw CodecError("tag", "unknown representation tag " + std::to_string(tag_byte));

    EncodedBlob blob;
    blob.tag = static_cast<Repr>(tag_byte);

    // reserve() hints are clamped by the bytes left so bogus counts fail in
    // the bounds-checked reads instead of in the allocator
    const std::uint64_t n = in.u64("node count");
    std::vector<std::string> labels;
    labels.reserve(std::min<std::uint64_t>(n, in.remaining() / 8));
    for (std::uint64_t k = 0; k < n; ++k) {
        const std::uint64_t len = in.u64("label length");
        const auto raw = in.bytes(len, "label bytes");
        labels.emplace_back(reinterpret_cast<const char*>(raw.data()), raw.size());
    }
    try {
        blob.nodes = NodeDictionary::from_labels(std::move(labels));
    } catch (const std::invalid_argument& ex) {
        throw CodecError("header", ex.what());
    }

    const std::uint64_t t = in.u64("time count");
    blob.times.reserve(std::min<std::uint64_t>(t, in.remaining() / 8));
    for (std::uint64_t k = 0; k < t; ++k) blob.times.push_back(in.i64("timestamp"));
    if (std::adjacent_find(blob.times.begin(), blob.times.end(),
                           std::greater_equal<Time>()) != blob.times.end())
        throw CodecError("header", "time dictionary not strictly increasing");

    if (blob.tag == Repr::ig) {
        blob.step = in.i64("grid step");
        const std::uint64_t t_prime = in.u64("endpoint count");
        blob.endpoints.reserve(std::min<std::uint64_t>(t_prime, in.remaining() / 8));
        for (std::uint64_t k = 0; k < t_prime; ++k)
            blob.endpoints.push_back(in.i64("endpoint"));
        if (std::adjacent_find(blob.endpoints.begin(), blob.endpoints.end(),
                               std::greater_equal<Time>()) != blob.endpoints.end())
            throw CodecError("header", "endpoint dictionary not strictly increasing");
    }

    blob.payload_bit_length = in.u64("payload bit length");
    if (blob.payload_bit_length / 8 > in.remaining())
        throw CodecError("header", "payload bit length exceeds blob size");
    const std::uint64_t payload_bytes = (blob.payload_bit_length + 7) / 8;
    const auto raw = in.bytes(payload_bytes, "payload");
    blob.payload.assign(raw.begin(), raw.end());

    if (in.remaining() != 0) throw CodecError("trailer", "trailing bytes after payload");
    return blob;
}

}  // namespace tnc
