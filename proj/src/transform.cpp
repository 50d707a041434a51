#include "tnc/transform.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace tnc {

IntervalGraph::IntervalGraph(NodeDictionary nodes, Time step,
                             std::vector<EdgeIntervals> edges)
    : nodes_(std::move(nodes)), step_(step), edges_(std::move(edges)) {
    if (step_ <= 0) throw std::invalid_argument("interval grid step must be positive");
    for (const EdgeIntervals& edge : edges_) {
        Time prev_end = std::numeric_limits<Time>::min();
        for (const Interval& iv : edge.spans) {
            if (iv.end <= iv.start)
                throw std::invalid_argument("interval must satisfy start < end");
            if (iv.start < prev_end)
                throw std::invalid_argument("intervals of one edge must be disjoint and sorted");
            prev_end = iv.end;
            endpoints_.push_back(iv.start);
            endpoints_.push_back(iv.end);
        }
        interval_count_ += edge.spans.size();
    }
    std::sort(endpoints_.begin(), endpoints_.end());
    endpoints_.erase(std::unique(endpoints_.begin(), endpoints_.end()), endpoints_.end());
}

std::size_t IntervalGraph::endpoint_index(Time value) const {
    auto it = std::lower_bound(endpoints_.begin(), endpoints_.end(), value);
    if (it == endpoints_.end() || *it != value)
        throw std::logic_error("not an interval endpoint: " + std::to_string(value));
    return static_cast<std::size_t>(it - endpoints_.begin());
}

Time infer_step(const LinkStream& ls) {
    const std::vector<Time>& times = ls.times();
    if (times.size() < 2)
        throw std::invalid_argument("step undefined: fewer than two occupied times");
    Time best = std::numeric_limits<Time>::max();
    for (std::size_t i = 1; i < times.size(); ++i)
        best = std::min(best, times[i] - times[i - 1]);
    return best;
}

LinkStream aggregate(const LinkStream& ls, Time window) {
    if (window < 1) throw std::invalid_argument("aggregation window must be >= 1");

    Provenance prov = ls.provenance();
    prov.window = window;
    if (ls.empty()) return LinkStream::from_events(ls.nodes(), {}, std::move(prov));

    const Time t_min = ls.times().front();
    std::vector<Event> windowed;
    windowed.reserve(ls.events().size());
    for (const Event& ev : ls.events())
        windowed.push_back(Event{(ev.time - t_min) / window, ev.u, ev.v});
    std::sort(windowed.begin(), windowed.end());
    windowed.erase(std::unique(windowed.begin(), windowed.end()), windowed.end());
    prov.merged_duplicates = ls.event_count() - windowed.size();

    return LinkStream::from_events(ls.nodes(), std::move(windowed), std::move(prov));
}

IntervalGraph build_intervals(const LinkStream& ls, Time step) {
    if (step <= 0) throw std::invalid_argument("interval grid step must be positive");

    // Events are sorted by (time, u, v), so each edge's list stays sorted.
    std::map<std::pair<NodeId, NodeId>, std::vector<Time>> by_edge;
    for (const Event& ev : ls.events()) by_edge[{ev.u, ev.v}].push_back(ev.time);

    std::vector<EdgeIntervals> edges;
    edges.reserve(by_edge.size());
    for (auto& [pair, obs] : by_edge) {
        EdgeIntervals edge{pair.first, pair.second, {}};
        Time run_start = obs.front();
        Time run_last = obs.front();
        for (std::size_t k = 1; k < obs.size(); ++k) {
            if (obs[k] == run_last + step) {
                run_last = obs[k];
            } else if (obs[k] < run_last + step) {
                // Closer than one grid step: the observations would overlap
                // as intervals, so this step size cannot represent the edge.
                throw std::invalid_argument(
                    "observations of one edge closer than the grid step (" +
                    std::to_string(run_last) + " and " + std::to_string(obs[k]) +
                    " at step " + std::to_string(step) + ")");
            } else {
                edge.spans.push_back(Interval{run_start, run_last + step});
                run_start = run_last = obs[k];
            }
        }
        edge.spans.push_back(Interval{run_start, run_last + step});
        edges.push_back(std::move(edge));
    }
    return IntervalGraph(ls.nodes(), step, std::move(edges));
}

LinkStream intervals_to_stream(const IntervalGraph& ig) {
    std::vector<Event> events;
    for (const EdgeIntervals& edge : ig.edges())
        for (const Interval& iv : edge.spans)
            for (Time x = iv.start; x < iv.end; x += ig.step())
                events.push_back(Event{x, edge.u, edge.v});
    Provenance prov;
    prov.source = "interval-expansion";
    return LinkStream::from_events(ig.nodes(), std::move(events), std::move(prov));
}

}  // namespace tnc
