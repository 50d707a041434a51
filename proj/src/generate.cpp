#include "tnc/generate.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace tnc {
namespace {

// Uniform draw from [0, k) by rejection, so the result depends only on the
// mt19937_64 output sequence and stays identical across platforms.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    const std::uint64_t threshold = (0 - k) % k;
    for (;;) {
        const std::uint64_t x = rng();
        if (x >= threshold) return x % k;
    }
}

// Rank of the first pair whose smaller endpoint is u, in the ordering
// (0,1), (0,2), ..., (0,n-1), (1,2), ...: u*(n-1) - u*(u-1)/2.
std::uint64_t first_rank_of(std::uint64_t u, std::uint64_t n) {
    return u * (n - 1) - u * (u - 1) / 2;
}

std::pair<NodeId, NodeId> unrank_pair(std::uint64_t rank, std::uint64_t n) {
    // invariant: first_rank_of(lo) <= rank < first_rank_of(hi)
    std::uint64_t lo = 0;
    std::uint64_t hi = n - 1;
    while (hi - lo > 1) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (first_rank_of(mid, n) <= rank) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const std::uint64_t u = lo;
    const std::uint64_t v = u + 1 + (rank - first_rank_of(u, n));
    return {static_cast<NodeId>(u), static_cast<NodeId>(v)};
}

// m distinct pair ranks drawn uniformly without replacement: a partial
// Fisher-Yates shuffle over [0, total), tracking displaced slots in a map
// so memory stays O(m) even when total is huge.
std::vector<std::uint64_t> sample_ranks(std::mt19937_64& rng, std::uint64_t m,
                                        std::uint64_t total) {
    std::map<std::uint64_t, std::uint64_t> displaced;
    std::vector<std::uint64_t> picked;
    picked.reserve(m);
    for (std::uint64_t j = 0; j < m; ++j) {
        const std::uint64_t r = j + bounded(rng, total - j);
        const auto value_at = [&](std::uint64_t slot) {
            const auto it = displaced.find(slot);
            return it == displaced.end() ? slot : it->second;
        };
        const std::uint64_t chosen = value_at(r);
        displaced[r] = value_at(j);
        picked.push_back(chosen);
    }
    return picked;
}

// Labels are zero-padded decimals so lexicographic dictionary order matches
// numeric order and id k always carries the label spelling k.
NodeDictionary full_dictionary(std::uint64_t n) {
    std::size_t width = 1;
    for (std::uint64_t v = n > 0 ? n - 1 : 0; v >= 10; v /= 10) ++width;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        labels.push_back(std::string(width - s.size(), '0') + s);
    }
    return NodeDictionary::from_labels(std::move(labels));
}

void require_feasible(std::uint64_t n, std::uint64_t m_edges) {
    const std::uint64_t total = n * (n - 1) / 2;
    if (m_edges > total)
        throw std::invalid_argument("cannot place " + std::to_string(m_edges) +
                                    " distinct edges on " + std::to_string(n) +
                                    " nodes (max " + std::to_string(total) + ")");
}

}  // namespace

LinkStream gen_stable(std::uint64_t n, std::uint64_t m_edges, std::uint64_t t_snapshots,
                      std::uint64_t seed) {
    require_feasible(n, m_edges);
    std::mt19937_64 rng(seed);
    std::vector<Event> events;
    events.reserve(m_edges * t_snapshots);
    if (m_edges > 0 && t_snapshots > 0) {
        for (const std::uint64_t rank : sample_ranks(rng, m_edges, n * (n - 1) / 2)) {
            const auto [u, v] = unrank_pair(rank, n);
            for (std::uint64_t k = 0; k < t_snapshots; ++k)
                events.push_back(Event{static_cast<Time>(k), u, v});
        }
    }
    Provenance prov;
    prov.source = "gen:stable";
    prov.seed = seed;
    return LinkStream::from_events(full_dictionary(n), std::move(events), std::move(prov));
}

LinkStream gen_independent(std::uint64_t n, std::uint64_t m_per_snapshot,
                           std::uint64_t t_snapshots, std::uint64_t seed) {
    require_feasible(n, m_per_snapshot);
    std::mt19937_64 rng(seed);
    std::vector<Event> events;
    events.reserve(m_per_snapshot * t_snapshots);
    if (m_per_snapshot > 0) {
        for (std::uint64_t k = 0; k < t_snapshots; ++k) {
            for (const std::uint64_t rank :
                 sample_ranks(rng, m_per_snapshot, n * (n - 1) / 2)) {
                const auto [u, v] = unrank_pair(rank, n);
                events.push_back(Event{static_cast<Time>(k), u, v});
            }
        }
    }
    Provenance prov;
    prov.source = "gen:independent";
    prov.seed = seed;
    return LinkStream::from_events(full_dictionary(n), std::move(events), std::move(prov));
}

}  // namespace tnc
