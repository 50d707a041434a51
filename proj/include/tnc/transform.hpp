#pragma once

#include <vector>

#include "tnc/core.hpp"

namespace tnc {

/// Half-open existence interval [start, end) on the raw time axis.
struct Interval {
    Time start;
    Time end;

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct EdgeIntervals {
    NodeId u;
    NodeId v;
    std::vector<Interval> spans;  // ascending, pairwise disjoint
};

/// Per-edge existence intervals on a fixed grid step. An edge observed at
/// consecutive grid points (gap exactly `step`) collapses into one interval
/// [first, last + step); isolated observations become [obs, obs + step).
/// Carries the interval count i and the distinct-endpoint dictionary whose
/// size is t'.
class IntervalGraph {
public:
    IntervalGraph() = default;
    IntervalGraph(NodeDictionary nodes, Time step, std::vector<EdgeIntervals> edges);

    const NodeDictionary& nodes() const { return nodes_; }
    Time step() const { return step_; }
    const std::vector<EdgeIntervals>& edges() const { return edges_; }  // sorted by (u, v)

    std::uint64_t interval_count() const { return interval_count_; }    // i
    const std::vector<Time>& endpoints() const { return endpoints_; }   // sorted distinct
    std::uint64_t endpoint_count() const { return endpoints_.size(); }  // t'

    /// Position of a start/end value in endpoints(). The value must occur.
    std::size_t endpoint_index(Time value) const;

private:
    NodeDictionary nodes_;
    Time step_ = 1;
    std::vector<EdgeIntervals> edges_;
    std::uint64_t interval_count_ = 0;
    std::vector<Time> endpoints_;
};

/// Minimum positive gap between consecutive occupied timestamps. Requires at
/// least two occupied times.
Time infer_step(const LinkStream& ls);

/// Non-overlapping windows anchored at the earliest occupied time: window k
/// covers [t_min + k*window, t_min + (k+1)*window). Each output event carries
/// its window index as the timestamp; events collapsing into the same window
/// are deduplicated, and empty windows contribute nothing to t.
LinkStream aggregate(const LinkStream& ls, Time window);

/// Merges each edge's observations into intervals. Only gaps exactly equal to
/// `step` merge; larger or off-grid gaps start a new interval.
IntervalGraph build_intervals(const LinkStream& ls, Time step);

/// Expands every interval back to its grid observations; exact inverse of
/// build_intervals.
LinkStream intervals_to_stream(const IntervalGraph& ig);

}  // namespace tnc
