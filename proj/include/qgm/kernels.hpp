#ifndef QGM_KERNELS_HPP
#define QGM_KERNELS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qgm/bracelets.hpp"

namespace qgm {

struct RankOracle; // matroid.hpp

// Data-parallel scan kernels. Each has a serial reference implementation and
// an OpenMP variant; results are bit-identical by construction (every output
// slot is a pure function of its index). The unsuffixed name dispatches to
// the OpenMP variant when compiled with OpenMP, the serial one otherwise.
namespace kernels {

std::vector<std::pair<int, int>> bracelet_adjacency_serial(const BiasedGraph& bg,
                                                           const std::vector<Bracelet>& nodes);
std::vector<std::pair<int, int>> bracelet_adjacency_parallel(const BiasedGraph& bg,
                                                             const std::vector<Bracelet>& nodes);
std::vector<std::pair<int, int>> bracelet_adjacency(const BiasedGraph& bg,
                                                    const std::vector<Bracelet>& nodes);

/// dep[m] = 1 iff some circuit mask is a subset of m. Ground size n <= 25.
std::vector<char> dependence_table_serial(const std::vector<std::uint64_t>& circuit_masks, int n);
std::vector<char> dependence_table_parallel(const std::vector<std::uint64_t>& circuit_masks, int n);
std::vector<char> dependence_table(const std::vector<std::uint64_t>& circuit_masks, int n);

/// rank[m] for every subset mask, from a dependence table.
std::vector<std::uint8_t> rank_table_from_dependence_serial(const std::vector<char>& dep, int n);
std::vector<std::uint8_t> rank_table_from_dependence_parallel(const std::vector<char>& dep, int n);
std::vector<std::uint8_t> rank_table_from_dependence(const std::vector<char>& dep, int n);

/// rank[m] for every subset mask, each entry evaluated through the closed-form
/// rank oracle independently.
std::vector<std::uint8_t> rank_table_from_oracle_serial(const RankOracle& oracle, int n);
std::vector<std::uint8_t> rank_table_from_oracle_parallel(const RankOracle& oracle, int n);
std::vector<std::uint8_t> rank_table_from_oracle(const RankOracle& oracle, int n);

struct IngletonScan {
    long min_value = 0;
    std::array<std::uint64_t, 4> argmin{0, 0, 0, 0};
    bool exhaustive = true;
    std::uint64_t seed = 0; // sampling seed when not exhaustive
};

/// Minimum Ingleton slack over subset quadruples (A,B,C,D); exhaustive when
/// (2^n)^4 <= quad_cap, otherwise deterministic seeded sampling of quad_cap
/// quadruples. Ties broken by lexicographically smallest (A,B,C,D).
IngletonScan ingleton_scan_serial(const std::vector<std::uint8_t>& rank, int n, long quad_cap,
                                  std::uint64_t seed);
IngletonScan ingleton_scan_parallel(const std::vector<std::uint8_t>& rank, int n, long quad_cap,
                                    std::uint64_t seed);
IngletonScan ingleton_scan(const std::vector<std::uint8_t>& rank, int n, long quad_cap,
                           std::uint64_t seed);

struct EliminationWitness {
    int circuit_i = -1;
    int circuit_j = -1;
    int element = -1;
};

/// First (by (i, j, e) order) violation of weak circuit elimination, given the
/// per-subset dependence table.
std::optional<EliminationWitness> elimination_scan_serial(
    const std::vector<std::uint64_t>& circuit_masks, const std::vector<char>& dep);
std::optional<EliminationWitness> elimination_scan_parallel(
    const std::vector<std::uint64_t>& circuit_masks, const std::vector<char>& dep);
std::optional<EliminationWitness> elimination_scan(const std::vector<std::uint64_t>& circuit_masks,
                                                   const std::vector<char>& dep);

} // namespace kernels

} // namespace qgm

#endif
