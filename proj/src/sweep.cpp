#include "tnc/sweep.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <stdexcept>

#include "tnc/transform.hpp"

namespace tnc {

std::vector<Time> default_scales(const LinkStream& ls) {
    if (ls.time_count() == 0) return {};
    if (ls.time_count() == 1) return {1};
    const Time step = infer_step(ls);
    const Time span = ls.times().back() - ls.times().front() + step;
    std::vector<Time> scales{step};
    for (Time w = step; w < span;) {
        w *= 2;
        scales.push_back(w);
    }
    return scales;
}

std::vector<SweepRow> run_sweep(const LinkStream& ls, std::vector<Time> scales,
                                SnmVariant variant,
                                std::optional<std::uint64_t> node_override) {
    if (scales.empty()) throw std::invalid_argument("sweep needs at least one scale");
    for (const Time w : scales)
        if (w < 1) throw std::invalid_argument("sweep window must be at least 1");
    std::sort(scales.begin(), scales.end());

    std::vector<SweepRow> rows;
    rows.reserve(scales.size());
    for (const Time w : scales) {
        const LinkStream agg = aggregate(ls, w);
        const CostReport rep = report(agg, 1, variant, node_override);
        SweepRow row;
        row.window = w;
        row.params = rep.params;
        row.cost_ls = rep.cost_ls;
        row.cost_sn_m = rep.cost_sn_m;
        row.cost_sn_e = rep.cost_sn_e;
        row.cost_ig = rep.cost_ig;
        row.best = rep.best;
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "window,n,m,e,t,i,t_prime,cost_ls,cost_sn_m,cost_sn_e,cost_ig,best\n";
    char buf[256];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof buf,
                      "%" PRId64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64 ",%" PRIu64
                      ",%" PRIu64 ",%" PRIu64 ",%.6f,%.6f,%.6f,%.6f,%s",
                      r.window, r.params.n, r.params.m, r.params.e, r.params.t,
                      r.params.i, r.params.t_prime, r.cost_ls, r.cost_sn_m, r.cost_sn_e,
                      r.cost_ig, std::string(to_string(r.best)).c_str());
        out << buf << '\n';
    }
}

}  // namespace tnc
