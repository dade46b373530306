#ifndef QGM_CYCLES_HPP
#define QGM_CYCLES_HPP

#include <cstdint>
#include <vector>

#include "qgm/multigraph.hpp"

namespace qgm {

inline constexpr long kDefaultCycleLimit = 1'000'000;

/// Every cycle of g exactly once, as sorted edge sets in lexicographic order.
/// Loops and digons count as cycles (sizes 1 and 2). Throws
/// CycleLimitExceeded when more than `limit` cycles exist. When
/// `max_length > 0`, only cycles with at most that many edges are produced
/// (used by the torus generator's capped mode).
std::vector<Cycle> enumerate_cycles(const Multigraph& g, long limit = kDefaultCycleLimit,
                                    int max_length = 0);

/// Default cap, overridable through the QUASIMATROID_CAP environment variable.
long cycle_limit_from_env();

/// Materialized cycle list with index lookup and (when the graph fits in 64
/// edges / 64 vertices) bitmask fast paths used by the scan kernels.
struct CycleCatalog {
    std::vector<Cycle> cycles; // canonical (lexicographic) order
    std::vector<std::uint64_t> edge_mask;   // valid iff edge_masks_ok
    std::vector<std::uint64_t> vertex_mask; // valid iff vertex_masks_ok
    bool edge_masks_ok = false;
    bool vertex_masks_ok = false;

    int size() const { return static_cast<int>(cycles.size()); }
    /// Index of the cycle with this edge set, or -1.
    int find(const Cycle& c) const;
};

/// Sorts the list into canonical order and precomputes masks.
CycleCatalog make_catalog(const Multigraph& g, std::vector<Cycle> cycles);

std::uint64_t edge_bits(const EdgeSet& x);
EdgeSet edges_from_bits(std::uint64_t bits);

} // namespace qgm

#endif
