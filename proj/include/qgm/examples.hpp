#ifndef QGM_EXAMPLES_HPP
#define QGM_EXAMPLES_HPP

#include <array>

#include "qgm/tripartition.hpp"

namespace qgm {
namespace examples {

Multigraph complete_graph(int n);
Multigraph complete_bipartite(int a, int b);

/// (K_n, empty bias) with every cycle on the chosen side: Frame gives the
/// bicircular-style frame matroid, Lift the lift matroid. n capped at 8.
Tripartition complete_empty_bias(int n, CycleClass side);

/// The parity tripartition induced by a 4-cycle with edges e1..e4 in cyclic
/// order: cycles meeting it in evenly many edges are balanced; meeting in
/// just e1 or just e3 -> L; just e2, just e4, or three edges -> F.
Tripartition four_cycle_parity(const Multigraph& g, const std::array<int, 4>& cycle_edges);

/// K_n with the 4-cycle 0-1-2-3 (edges added first) parity tripartition.
Tripartition four_cycle_parity_complete(int n);

/// K_{a,b} plus an a-cycle on one side and a b-cycle on the other, empty
/// bias; the two added cycles form one side of the tripartition, every other
/// cycle the opposite side.
Tripartition kab_plus_cycles(int a, int b, CycleClass side_for_pair);

struct TorusGrid {
    Multigraph graph;
    BiasedGraph biased;                            // balanced = contractible
    std::vector<std::pair<int, int>> homology;     // per catalog cycle, normalized
    bool complete_cycles = true;                   // false in length-capped mode
};

/// 2m x 2m torus grid; vertex (x, y) = x + 2m*y, wraparound edges in both
/// directions. Homology classes are edge-displacement sums normalized so the
/// first nonzero coordinate is positive; class (0,0) = contractible =
/// balanced. max_cycle_length > 0 restricts enumeration for
/// bracelet-component counting on larger grids.
TorusGrid torus_grid(int m, long cycle_limit = 0, int max_cycle_length = 0);

} // namespace examples
} // namespace qgm

#endif
