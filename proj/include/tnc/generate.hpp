#pragma once

#include <cstdint>

#include "tnc/core.hpp"

namespace tnc {

/// One uniform G(n, M) edge set replicated at times 0..t-1 (a perfectly
/// stable network). The dictionary declares all n nodes, observed or not.
/// Deterministic per (params, seed).
LinkStream gen_stable(std::uint64_t n, std::uint64_t m_edges, std::uint64_t t_snapshots,
                      std::uint64_t seed);

/// A fresh uniform G(n, M) edge set per time 0..t-1 (fully independent
/// snapshots), so e = m_per_snapshot * t exactly.
LinkStream gen_independent(std::uint64_t n, std::uint64_t m_per_snapshot,
                           std::uint64_t t_snapshots, std::uint64_t seed);

}  // namespace tnc
