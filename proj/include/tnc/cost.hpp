#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "tnc/core.hpp"
#include "tnc/transform.hpp"

namespace tnc {

/// Representation tags. The numeric values double as the codec's on-disk tag
/// byte and the lowercase names as the CSV vocabulary.
enum class Repr : std::uint8_t { ls = 0, sn_m = 1, sn_e = 2, ig = 3 };

std::string_view to_string(Repr r);
std::optional<Repr> repr_from_string(std::string_view s);

/// The two published forms of the snapshot-matrix cost. `prose` charges the
/// m-by-t presence matrix (t*m bits, one bit per pair-time cell); `printed`
/// keeps the t*e variant as typeset.
enum class SnmVariant { prose, printed };

std::string_view to_string(SnmVariant v);
std::optional<SnmVariant> snm_variant_from_string(std::string_view s);

/// The counts every cost formula is a function of. n, m, e, t come from one
/// stream; i and t_prime from its intervals built at a declared step.
struct CostParams {
    std::uint64_t n = 0;        // distinct nodes (alphabet size)
    std::uint64_t m = 0;        // distinct edges
    std::uint64_t e = 0;        // events
    std::uint64_t t = 0;        // occupied times
    std::uint64_t i = 0;        // intervals
    std::uint64_t t_prime = 0;  // distinct interval endpoints

    friend bool operator==(const CostParams&, const CostParams&) = default;
};

/// Per-symbol costs: one time index, one node pair, one interval endpoint.
/// Alphabets of size 0 or 1 cost 0 bits per symbol.
struct UnitCosts {
    double time_bits = 0;      // log2(t)
    double pair_bits = 0;      // 2 log2(n)
    double endpoint_bits = 0;  // log2(t')
};

UnitCosts unit_costs(const CostParams& p);

// Analytic costs, in fractional bits. All are 0 for the empty network.
double cost_link_stream(const CostParams& p);        // m*Im + e*It + m*It
double cost_snapshot_matrix(const CostParams& p,     // m*Im + t*It + t*m (prose)
                            SnmVariant variant = SnmVariant::prose);
double cost_snapshot_edgelist(const CostParams& p);  // e*Im + t*It + t*Im
double cost_interval_graph(const CostParams& p);     // m*Im + 2i*It' + m*It'

/// Static-graph baseline: (n^2 matrix bits, 2m log2(n) edge-list bits).
std::pair<double, double> static_costs(std::uint64_t n, std::uint64_t m);

/// Argmin over the four costs with the deterministic tie-break order
/// ls, ig, sn_e, sn_m.
Repr cheapest(double ls, double sn_m, double sn_e, double ig);

struct CostReport {
    CostParams params;
    UnitCosts units;
    double cost_ls = 0;
    double cost_sn_m = 0;
    double cost_sn_e = 0;
    double cost_ig = 0;
    Repr best = Repr::ls;
    SnmVariant snm_variant = SnmVariant::prose;
};

/// Fills CostParams from a stream and its interval graph. `node_override`
/// declares a vertex-alphabet size larger than the observed node count.
CostParams params_of(const LinkStream& ls, const IntervalGraph& ig,
                     std::optional<std::uint64_t> node_override = {});

/// All four costs for one stream, with intervals built at `step`.
CostReport report(const LinkStream& ls, Time step, SnmVariant variant = SnmVariant::prose,
                  std::optional<std::uint64_t> node_override = {});

/// Cost assembly from already-known params.
CostReport report_from_params(const CostParams& p, SnmVariant variant = SnmVariant::prose);

}  // namespace tnc
