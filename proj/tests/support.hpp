#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tnc/core.hpp"
#include "tnc/transform.hpp"

namespace testsup {

// Width tally with the same interface as BitWriter; lets tests count payload
// bits without touching the bitstream machinery under test.
struct CountingSink {
    std::uint64_t bits = 0;
    void write(std::uint64_t, unsigned width) { bits += width; }
};

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    const std::uint64_t threshold = (0 - k) % k;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % k;
    }
}

// Streams from (time, u, v) triples written as integers; node labels are
// zero-padded so dictionary order equals numeric order.
inline tnc::LinkStream make_stream(std::initializer_list<std::array<tnc::Time, 3>> triples) {
    std::vector<tnc::RawTriple> raw;
    raw.reserve(triples.size());
    const auto label = [](tnc::Time v) {
        std::string s = std::to_string(v);
        return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
    };
    for (const auto& tr : triples) raw.push_back({tr[0], label(tr[1]), label(tr[2])});
    return tnc::canonicalize(raw);
}

struct GridSpec {
    std::uint64_t max_nodes = 50;    // >= 2
    std::uint64_t max_events = 2000;
    std::uint64_t max_slots = 128;   // grid positions, not occupied times
    tnc::Time offset = 0;
    tnc::Time step = 1;
};

// A random stream whose timestamps all sit on offset + k*step. Node and time
// counts come out as observed (canonical form), so every width and alphabet
// in the tests reflects the data alone.
inline tnc::LinkStream random_stream(std::mt19937_64& rng, const GridSpec& spec) {
    const std::uint64_t n = 2 + bounded(rng, spec.max_nodes - 1);
    const std::uint64_t slots = 1 + bounded(rng, spec.max_slots);
    const std::uint64_t events = bounded(rng, spec.max_events + 1);
    const auto label = [](std::uint64_t v) {
        std::string s = std::to_string(v);
        return std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
    };
    std::vector<tnc::RawTriple> raw;
    raw.reserve(events);
    for (std::uint64_t k = 0; k < events; ++k) {
        const std::uint64_t u = bounded(rng, n);
        const std::uint64_t v = (u + 1 + bounded(rng, n - 1)) % n;
        const tnc::Time at =
            spec.offset + spec.step * static_cast<tnc::Time>(bounded(rng, slots));
        raw.push_back({at, label(u), label(v)});
    }
    return tnc::canonicalize(raw);
}

// Brute-force interval oracle: per-edge time membership sets, each maximal
// chain x, x+step, ..., y becomes [x, y+step). Requires grid-aligned input.
inline std::vector<tnc::EdgeIntervals> interval_oracle(const tnc::LinkStream& ls,
                                                       tnc::Time step) {
    std::map<std::pair<tnc::NodeId, tnc::NodeId>, std::set<tnc::Time>> member;
    for (const tnc::Event& ev : ls.events()) member[{ev.u, ev.v}].insert(ev.time);
    std::vector<tnc::EdgeIntervals> edges;
    edges.reserve(member.size());
    for (const auto& [pair, times] : member) {
        tnc::EdgeIntervals edge{pair.first, pair.second, {}};
        for (const tnc::Time x : times) {
            if (times.count(x - step)) continue;  // not a chain head
            tnc::Time last = x;
            while (times.count(last + step)) last += step;
            edge.spans.push_back(tnc::Interval{x, last + step});
        }
        edges.push_back(std::move(edge));
    }
    return edges;
}

}  // namespace testsup
