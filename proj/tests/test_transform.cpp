#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "support.hpp"
#include "tnc/transform.hpp"

using namespace tnc;
using testsup::make_stream;

TEST_CASE("infer_step is the minimum positive gap") {
    CHECK(infer_step(make_stream({{10, 0, 1}, {20, 0, 1}, {50, 1, 2}})) == 10);
    CHECK(infer_step(make_stream({{0, 0, 1}, {7, 0, 1}})) == 7);
    CHECK(infer_step(make_stream({{3, 0, 1}, {4, 0, 1}, {10, 0, 1}})) == 1);
    CHECK_THROWS_AS(infer_step(make_stream({{3, 0, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(infer_step(LinkStream{}), std::invalid_argument);
}

TEST_CASE("aggregate windows anchor at the earliest time") {
    const LinkStream ls =
        make_stream({{0, 0, 1}, {20, 0, 1}, {40, 0, 1}, {60, 1, 2}});

    SUBCASE("window 40 merges the first two observations") {
        const LinkStream agg = aggregate(ls, 40);
        CHECK(agg.time_count() == 2);
        CHECK(agg.event_count() == 3);
        CHECK(agg.times() == std::vector<Time>{0, 1});
        CHECK(agg.provenance().window == 40);
        CHECK(agg.provenance().merged_duplicates == 1);
    }

    SUBCASE("a window covering the span leaves one snapshot") {
        const LinkStream agg = aggregate(ls, 1000);
        CHECK(agg.time_count() == 1);
        CHECK(agg.event_count() == agg.edge_count());
    }

    SUBCASE("anchor is the earliest event, not zero") {
        const LinkStream late = make_stream({{100, 0, 1}, {101, 1, 2}});
        CHECK(aggregate(late, 2).time_count() == 1);
    }

    SUBCASE("window 1 on a dense zero-based grid is the identity") {
        const LinkStream grid = make_stream({{0, 0, 1}, {1, 0, 1}, {2, 1, 2}});
        CHECK(aggregate(grid, 1) == grid);
    }

    SUBCASE("window below 1 is rejected") {
        CHECK_THROWS_AS(aggregate(ls, 0), std::invalid_argument);
    }
}

TEST_CASE("build_intervals merges exactly-adjacent grid observations") {
    SUBCASE("four consecutive years collapse into one interval") {
        const LinkStream ls =
            make_stream({{2010, 0, 1}, {2011, 0, 1}, {2012, 0, 1}, {2013, 0, 1}});
        const IntervalGraph ig = build_intervals(ls, 1);
        REQUIRE(ig.interval_count() == 1);
        CHECK(ig.edges().front().spans.front() == Interval{2010, 2014});
        CHECK(ig.endpoints() == std::vector<Time>{2010, 2014});
    }

    SUBCASE("a gap wider than the step starts a new interval") {
        const LinkStream ls = make_stream({{0, 0, 1}, {40, 0, 1}});
        const IntervalGraph ig = build_intervals(ls, 20);
        REQUIRE(ig.interval_count() == 2);
        CHECK(ig.edges().front().spans[0] == Interval{0, 20});
        CHECK(ig.edges().front().spans[1] == Interval{40, 60});
        CHECK(ig.endpoint_count() == 4);
    }

    SUBCASE("an exact chain merges across several steps") {
        const LinkStream ls = make_stream({{0, 0, 1}, {20, 0, 1}, {40, 0, 1}});
        const IntervalGraph ig = build_intervals(ls, 20);
        CHECK(ig.interval_count() == 1);
        CHECK(ig.edges().front().spans.front() == Interval{0, 60});
    }

    SUBCASE("edges are independent and endpoints shared") {
        const LinkStream ls =
            make_stream({{0, 0, 1}, {1, 0, 1}, {5, 1, 2}, {1, 1, 2}});
        const IntervalGraph ig = build_intervals(ls, 1);
        CHECK(ig.interval_count() == 3);  // [0,2) for 0-1; [1,2) and [5,6) for 1-2
        CHECK(ig.endpoints() == std::vector<Time>{0, 1, 2, 5, 6});
    }

    SUBCASE("observations closer than the step are rejected") {
        const LinkStream ls = make_stream({{0, 0, 1}, {10, 0, 1}});
        CHECK_THROWS_WITH_AS(
            build_intervals(ls, 20),
            "observations of one edge closer than the grid step (0 and 10 at step 20)",
            std::invalid_argument);
    }

    SUBCASE("step must be positive") {
        CHECK_THROWS_AS(build_intervals(LinkStream{}, 0), std::invalid_argument);
    }
}

TEST_CASE("interval graph construction validates its invariants") {
    const NodeDictionary dict = NodeDictionary::from_labels({"a", "b"});
    CHECK_THROWS_AS(IntervalGraph(dict, 1, {{0, 1, {{5, 5}}}}), std::invalid_argument);
    CHECK_THROWS_AS(IntervalGraph(dict, 1, {{0, 1, {{0, 4}, {2, 6}}}}),
                    std::invalid_argument);

    const IntervalGraph ig(dict, 2, {{0, 1, {{0, 4}, {6, 8}}}});
    CHECK(ig.interval_count() == 2);
    CHECK(ig.endpoint_count() == 4);
    CHECK(ig.endpoint_index(6) == 2);
    CHECK_THROWS_AS((void)ig.endpoint_index(5), std::logic_error);
}

TEST_CASE("intervals expand back to their grid observations") {
    const NodeDictionary dict = NodeDictionary::from_labels({"a", "b"});
    const IntervalGraph ig(dict, 2, {{0, 1, {{0, 6}}}});
    const LinkStream expanded = intervals_to_stream(ig);
    CHECK(expanded.times() == std::vector<Time>{0, 2, 4});
    CHECK(expanded.event_count() == 3);
}

TEST_CASE("interval construction agrees with the membership oracle") {
    std::mt19937_64 rng(515);
    for (const Time step : {Time{1}, Time{5}, Time{20}}) {
        for (int round = 0; round < 15; ++round) {
            testsup::GridSpec spec;
            spec.max_nodes = 12;
            spec.max_events = 300;
            spec.max_slots = 25;
            spec.offset = -17;
            spec.step = step;
            const LinkStream ls = testsup::random_stream(rng, spec);

            const IntervalGraph ig = build_intervals(ls, step);
            const std::vector<EdgeIntervals> oracle = testsup::interval_oracle(ls, step);
            REQUIRE(ig.edges().size() == oracle.size());
            for (std::size_t k = 0; k < oracle.size(); ++k) {
                CHECK(ig.edges()[k].u == oracle[k].u);
                CHECK(ig.edges()[k].v == oracle[k].v);
                CHECK(ig.edges()[k].spans == oracle[k].spans);
            }

            CHECK(ig.interval_count() <= ls.event_count());
            CHECK(ig.endpoint_count() <= 2 * ig.interval_count());
            CHECK(intervals_to_stream(ig) == ls);
        }
    }
}
