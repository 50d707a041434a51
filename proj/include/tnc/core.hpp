#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace tnc {

using NodeId = std::uint32_t;
using Time = std::int64_t;

/// Dense node dictionary. Ids follow lexicographic label order, so a given
/// label set always yields the same ids regardless of input order.
class NodeDictionary {
public:
    NodeDictionary() = default;

    /// Builds a dictionary from distinct labels (any order). Duplicate or
    /// empty labels are rejected.
    static NodeDictionary from_labels(std::vector<std::string> labels);

    NodeId id_of(const std::string& label) const;
    const std::string& label_of(NodeId id) const { return labels_.at(id); }
    bool contains(const std::string& label) const { return index_.count(label) != 0; }
    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }

    bool operator==(const NodeDictionary& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, NodeId> index_;
};

/// One observed undirected interaction. Canonical order: u < v, never u == v.
struct Event {
    Time time;
    NodeId u;
    NodeId v;

    friend auto operator<=>(const Event&, const Event&) = default;
};

/// Where a stream came from. Not part of stream equality.
struct Provenance {
    std::string source;
    std::optional<Time> window;            // aggregation window, raw time units
    std::uint64_t merged_duplicates = 0;   // exact triples collapsed on construction
    std::optional<std::uint64_t> seed;     // generator seed, when synthetic
};

/// A discrete-time dynamic network: a deduplicated, sorted set of
/// (time, u, v) events over node and time dictionaries. `times` holds only
/// occupied timestamps (each has at least one event). Immutable after
/// construction and safe to share across threads read-only.
class LinkStream {
public:
    LinkStream() = default;

    /// Sorts and deduplicates `events`, derives the occupied-time list and
    /// the distinct-edge count. The dictionary may carry labels that never
    /// occur in `events` (an explicit node-count declaration).
    static LinkStream from_events(NodeDictionary nodes, std::vector<Event> events,
                                  Provenance prov = {});

    const NodeDictionary& nodes() const { return nodes_; }
    const std::vector<Time>& times() const { return times_; }
    const std::vector<Event>& events() const { return events_; }
    const Provenance& provenance() const { return provenance_; }

    std::uint64_t node_count() const { return nodes_.size(); }    // n
    std::uint64_t edge_count() const { return edge_count_; }      // m
    std::uint64_t event_count() const { return events_.size(); }  // e
    std::uint64_t time_count() const { return times_.size(); }    // t

    bool empty() const { return events_.empty(); }

    /// Position of an occupied timestamp in times(). The value must occur.
    std::size_t time_index(Time value) const;

    bool operator==(const LinkStream& other) const {
        return nodes_ == other.nodes_ && events_ == other.events_;
    }

private:
    NodeDictionary nodes_;
    std::vector<Time> times_;
    std::vector<Event> events_;
    std::uint64_t edge_count_ = 0;
    Provenance provenance_;
};

/// An unparsed (time, label, label) triple.
struct RawTriple {
    Time time;
    std::string a;
    std::string b;
};

/// Canonical construction: orders each pair, deduplicates exact triples
/// (count recorded in provenance), sorts by (time, u, v) and assembles the
/// dictionaries. Self-loops are rejected with a diagnostic naming the triple.
LinkStream canonicalize(const std::vector<RawTriple>& triples, Provenance prov = {});

/// Summary columns: counts plus observation ratios. Ratio fields are absent
/// when their denominator is zero.
struct StatsSummary {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t e = 0;
    std::uint64_t t = 0;
    std::optional<double> e_per_t;
    std::optional<double> e_per_m;
    std::optional<double> e_per_m_per_t_pct;
};

StatsSummary stats(const LinkStream& ls);

/// Ratio assembly shared by stats(); usable directly on published counts.
StatsSummary summarize_counts(std::uint64_t n, std::uint64_t m, std::uint64_t e,
                              std::uint64_t t);

}  // namespace tnc
