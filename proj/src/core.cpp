#include "tnc/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tnc {

NodeDictionary NodeDictionary::from_labels(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    NodeDictionary dict;
    dict.labels_ = std::move(labels);
    dict.index_.reserve(dict.labels_.size());
    for (std::size_t i = 0; i < dict.labels_.size(); ++i) {
        const std::string& label = dict.labels_[i];
        if (label.empty())
            throw std::invalid_argument("empty node label");
        if (i > 0 && label == dict.labels_[i - 1])
            throw std::invalid_argument("duplicate node label: '" + label + "'");
        dict.index_.emplace(label, static_cast<NodeId>(i));
    }
    return dict;
}

NodeId NodeDictionary::id_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
        throw std::invalid_argument("unknown node label: '" + label + "'");
    return it->second;
}

LinkStream LinkStream::from_events(NodeDictionary nodes, std::vector<Event> events,
                                   Provenance prov) {
    for (const Event& ev : events) {
        if (ev.u == ev.v)
            throw std::invalid_argument("self-loop event at time " + std::to_string(ev.time));
        if (ev.u > ev.v)
            throw std::invalid_argument("event nodes not in canonical order (u < v)");
        if (ev.v >= nodes.size())
            throw std::invalid_argument("event node id out of dictionary range");
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    LinkStream ls;
    ls.nodes_ = std::move(nodes);
    ls.events_ = std::move(events);
    ls.provenance_ = std::move(prov);

    for (const Event& ev : ls.events_) {
        if (ls.times_.empty() || ls.times_.back() != ev.time)
            ls.times_.push_back(ev.time);
    }

    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(ls.events_.size());
    for (const Event& ev : ls.events_) pairs.emplace_back(ev.u, ev.v);
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    ls.edge_count_ = pairs.size();

    return ls;
}

std::size_t LinkStream::time_index(Time value) const {
    auto it = std::lower_bound(times_.begin(), times_.end(), value);
    if (it == times_.end() || *it != value)
        throw std::logic_error("time value not occupied: " + std::to_string(value));
    return static_cast<std::size_t>(it - times_.begin());
}

LinkStream canonicalize(const std::vector<RawTriple>& triples, Provenance prov) {
    std::vector<std::string> labels;
    labels.reserve(triples.size() * 2);
    for (std::size_t k = 0; k < triples.size(); ++k) {
        const RawTriple& tr = triples[k];
        if (tr.a == tr.b)
            throw std::invalid_argument("self-loop in triple #" + std::to_string(k + 1) +
                                        ": (" + std::to_string(tr.time) + ", " + tr.a +
                                        ", " + tr.b + ")");
        labels.push_back(tr.a);
        labels.push_back(tr.b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    NodeDictionary dict = NodeDictionary::from_labels(std::move(labels));

    std::vector<Event> events;
    events.reserve(triples.size());
    for (const RawTriple& tr : triples) {
        NodeId u = dict.id_of(tr.a);
        NodeId v = dict.id_of(tr.b);
        if (u > v) std::swap(u, v);
        events.push_back(Event{tr.time, u, v});
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    prov.merged_duplicates += triples.size() - events.size();

    return LinkStream::from_events(std::move(dict), std::move(events), std::move(prov));
}

StatsSummary summarize_counts(std::uint64_t n, std::uint64_t m, std::uint64_t e,
                              std::uint64_t t) {
    StatsSummary s;
    s.n = n;
    s.m = m;
    s.e = e;
    s.t = t;
    if (t > 0) s.e_per_t = static_cast<double>(e) / static_cast<double>(t);
    if (m > 0) s.e_per_m = static_cast<double>(e) / static_cast<double>(m);
    if (m > 0 && t > 0)
        s.e_per_m_per_t_pct =
            100.0 * static_cast<double>(e) / (static_cast<double>(m) * static_cast<double>(t));
    return s;
}

StatsSummary stats(const LinkStream& ls) {
    return summarize_counts(ls.node_count(), ls.edge_count(), ls.event_count(),
                            ls.time_count());
}

}  // namespace tnc
