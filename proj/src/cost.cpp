#include "tnc/cost.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace tnc {

namespace {

// Alphabets of size 0 or 1 carry no information per symbol.
double log2_or_zero(std::uint64_t alphabet) {
    return alphabet <= 1 ? 0.0 : std::log2(static_cast<double>(alphabet));
}

double d(std::uint64_t x) { return static_cast<double>(x); }

}  // namespace

std::string_view to_string(Repr r) {
    switch (r) {
        case Repr::ls: return "ls";
        case Repr::sn_m: return "sn_m";
        case Repr::sn_e: return "sn_e";
        case Repr::ig: return "ig";
    }
    return "?";
}

std::optional<Repr> repr_from_string(std::string_view s) {
    if (s == "ls") return Repr::ls;
    if (s == "sn_m") return Repr::sn_m;
    if (s == "sn_e") return Repr::sn_e;
    if (s == "ig") return Repr::ig;
    return std::nullopt;
}

std::string_view to_string(SnmVariant v) {
    return v == SnmVariant::prose ? "prose" : "printed";
}

std::optional<SnmVariant> snm_variant_from_string(std::string_view s) {
    if (s == "prose") return SnmVariant::prose;
    if (s == "printed") return SnmVariant::printed;
    return std::nullopt;
}

UnitCosts unit_costs(const CostParams& p) {
    UnitCosts u;
    u.time_bits = log2_or_zero(p.t);
    u.pair_bits = 2.0 * log2_or_zero(p.n);
    u.endpoint_bits = log2_or_zero(p.t_prime);
    return u;
}

double cost_link_stream(const CostParams& p) {
    const UnitCosts u = unit_costs(p);
    return d(p.m) * u.pair_bits + d(p.e) * u.time_bits + d(p.m) * u.time_bits;
}

double cost_snapshot_matrix(const CostParams& p, SnmVariant variant) {
    const UnitCosts u = unit_costs(p);
    const double cells = variant == SnmVariant::prose ? d(p.t) * d(p.m) : d(p.t) * d(p.e);
    return d(p.m) * u.pair_bits + d(p.t) * u.time_bits + cells;
}

double cost_snapshot_edgelist(const CostParams& p) {
    const UnitCosts u = unit_costs(p);
    return d(p.e) * u.pair_bits + d(p.t) * u.time_bits + d(p.t) * u.pair_bits;
}

double cost_interval_graph(const CostParams& p) {
    const UnitCosts u = unit_costs(p);
    return d(p.m) * u.pair_bits + 2.0 * d(p.i) * u.endpoint_bits +
           d(p.m) * u.endpoint_bits;
}

std::pair<double, double> static_costs(std::uint64_t n, std::uint64_t m) {
    return {d(n) * d(n), 2.0 * d(m) * log2_or_zero(n)};
}

Repr cheapest(double ls, double sn_m, double sn_e, double ig) {
    const std::array<std::pair<Repr, double>, 4> order = {{
        {Repr::ls, ls},
        {Repr::ig, ig},
        {Repr::sn_e, sn_e},
        {Repr::sn_m, sn_m},
    }};
    Repr best = order[0].first;
    double best_cost = order[0].second;
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (order[k].second < best_cost) {
            best = order[k].first;
            best_cost = order[k].second;
        }
    }
    return best;
}

CostParams params_of(const LinkStream& ls, const IntervalGraph& ig,
                     std::optional<std::uint64_t> node_override) {
    CostParams p;
    p.n = ls.node_count();
    if (node_override) {
        if (*node_override < p.n)
            throw std::invalid_argument("node-count override below observed node count");
        p.n = *node_override;
    }
    p.m = ls.edge_count();
    p.e = ls.event_count();
    p.t = ls.time_count();
    p.i = ig.interval_count();
    p.t_prime = ig.endpoint_count();
    return p;
}

CostReport report(const LinkStream& ls, Time step, SnmVariant variant,
                  std::optional<std::uint64_t> node_override) {
    const IntervalGraph ig = build_intervals(ls, step);
    return report_from_params(params_of(ls, ig, node_override), variant);
}

CostReport report_from_params(const CostParams& p, SnmVariant variant) {
    CostReport r;
    r.params = p;
    r.units = unit_costs(p);
    r.cost_ls = cost_link_stream(p);
    r.cost_sn_m = cost_snapshot_matrix(p, variant);
    r.cost_sn_e = cost_snapshot_edgelist(p);
    r.cost_ig = cost_interval_graph(p);
    r.best = cheapest(r.cost_ls, r.cost_sn_m, r.cost_sn_e, r.cost_ig);
    r.snm_variant = variant;
    return r;
}

}  // namespace tnc
