#ifndef QGM_CONSTRUCTIONS_HPP
#define QGM_CONSTRUCTIONS_HPP

#include <vector>

#include "qgm/matroid.hpp"

namespace qgm {

/// Result of a graph-level construction: the new tripartition plus the stable
/// old-edge -> new-edge index map (-1 for removed edges).
struct MinorResult {
    Tripartition part;
    std::vector<int> edge_map;
};

/// G \ e with every surviving cycle keeping its class.
MinorResult delete_edge(const Tripartition& t, int e);

/// G / e for a non-loop e; a cycle C of G/e inherits the class of C or of
/// C + e, whichever was a cycle of G. Throws LoopContraction on loops.
MinorResult contract_edge(const Tripartition& t, int e);

/// Circuit-level minor M \ deletions / contractions with stable relabelling;
/// covers unbalanced-loop contraction, which the graph-level path refuses.
CircuitFamily minor_circuits(const CircuitFamily& cf, const EdgeSet& deletions,
                             const EdgeSet& contractions, std::vector<int>* edge_map = nullptr);

/// Circuit-level 2-sum on basepoints e1/e2 (test oracle for the graph-level
/// sums): ground set is (E1 - e1) then (E2 - e2).
CircuitFamily two_sum_circuits(const CircuitFamily& m1, int e1, const CircuitFamily& m2, int e2);

struct LinkSumResult {
    Tripartition part;
    std::vector<int> map1, map2; // old edge index -> glued index, -1 for basepoint
};

/// 2-sum with the cycle matroid of g2 realized in the graphs: identify the
/// basepoint endpoints, delete the basepoints. e1 must be a link of t1's
/// graph and e2 a link of g2 (BasepointNotLink otherwise); every cycle of g2
/// is balanced.
LinkSumResult link_sum(const Tripartition& t1, int e1, const Multigraph& g2, int e2);

struct LoopSumResult {
    Multigraph graph;
    CircuitFamily circuits;
    std::vector<int> map1, map2;
};

/// 2-sum on a shared unbalanced loop, realized by identifying the loop
/// vertices; the circuit family is the 2-sum of M(G1,B1,chi1) and
/// M(G2,B2,chi2). The result is biased graphic but in general not
/// quasi-graphic.
LoopSumResult loop_sum(const BiasedGraph& bg1, int e1, const BraceletFunction& chi1,
                       const BiasedGraph& bg2, int e2, const BraceletFunction& chi2);

struct BrokenHandcuffResult {
    CircuitFamily circuits;
    // ground layout: core edges first, then each satellite's edges in input order
    std::vector<int> satellite_offset;
};

/// Frame circuits of the core, lift circuits of each satellite, and the two
/// broken-handcuff circuit types joining satellite cycles through core paths.
/// Satellites attach at distinct core vertices (EdgeSetCollision otherwise).
BrokenHandcuffResult broken_handcuff(const BiasedGraph& core,
                                     const std::vector<std::pair<int, BiasedGraph>>& satellites);

} // namespace qgm

#endif
