#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "tnc/cost.hpp"

namespace tnc {

struct SweepRow {
    Time window = 1;
    CostParams params;
    double cost_ls = 0;
    double cost_sn_m = 0;
    double cost_sn_e = 0;
    double cost_ig = 0;
    Repr best = Repr::ls;
};

/// Doubling window sequence step*2^k starting at the native step, ending with
/// the first window that covers the whole time span. A single occupied time
/// yields [1]; an empty stream yields [].
std::vector<Time> default_scales(const LinkStream& ls);

/// One row per window, ascending: aggregate, rebuild intervals at step 1 on
/// the window indices, and price all four representations.
std::vector<SweepRow> run_sweep(const LinkStream& ls, std::vector<Time> scales,
                                SnmVariant variant = SnmVariant::prose,
                                std::optional<std::uint64_t> node_override = {});

/// CSV with the exact header
/// window,n,m,e,t,i,t_prime,cost_ls,cost_sn_m,cost_sn_e,cost_ig,best
/// and costs printed with six decimal places.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

}  // namespace tnc
