#ifndef QGM_BIAS_HPP
#define QGM_BIAS_HPP

#include <array>
#include <optional>
#include <vector>

#include "qgm/cycles.hpp"
#include "qgm/multigraph.hpp"

namespace qgm {

/// A graph together with its full cycle list and a balanced-membership flag
/// per cycle. The theta property is validated by check_theta_property, not by
/// construction, so deliberately broken inputs can be examined.
struct BiasedGraph {
    Multigraph graph;
    CycleCatalog cat;
    std::vector<char> balanced; // aligned with cat.cycles

    bool is_cycle_balanced(int idx) const { return balanced[idx] != 0; }
    std::vector<int> unbalanced_indices() const;
    bool all_balanced() const;
};

/// Enumerates the cycles of g and flags those listed in balanced_cycles.
/// Throws InvalidInput if a listed set is not a cycle of g.
BiasedGraph make_biased_graph(Multigraph g, const std::vector<Cycle>& balanced_cycles,
                              long cycle_limit = 0);

struct ThetaResult {
    bool ok = true;
    EdgeSet theta;                 // witness: a theta with exactly two balanced cycles
    std::array<Cycle, 3> cycles;   // its three cycles
};

/// ok iff no theta subgraph of g has exactly two of its three cycles balanced.
ThetaResult check_theta_property(const BiasedGraph& bg);

/// True iff no unbalanced cycle of bg lies inside x.
bool is_balanced(const BiasedGraph& bg, const EdgeSet& x);

/// b(X): number of components of G[X] containing no unbalanced cycle.
int balanced_components(const BiasedGraph& bg, const EdgeSet& x);

/// All inclusion-minimal edge sets whose removal leaves only balanced cycles,
/// searched by increasing size up to max_size (default |E|). Throws
/// GraphBalanced when there is nothing to balance and SearchCapExceeded when
/// more than eval_cap candidate sets would have to be examined.
std::vector<EdgeSet> minimal_balancing_sets(const BiasedGraph& bg, int max_size = -1,
                                            long eval_cap = 50'000'000);

/// Vertices whose incident-edge set is a balancing set, i.e. vertices lying on
/// every unbalanced cycle. Empty when the graph is balanced.
std::vector<int> balancing_vertices(const BiasedGraph& bg);

} // namespace qgm

#endif
