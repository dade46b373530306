#ifndef QGM_MATROID_HPP
#define QGM_MATROID_HPP

#include <string>
#include <vector>

#include "qgm/tripartition.hpp"

namespace qgm {

/// Canonical circuit list: sorted edge sets in lexicographic order, pairwise
/// incomparable, none empty.
struct CircuitFamily {
    int ground_size = 0;
    std::vector<EdgeSet> circuits;

    bool has(const EdgeSet& x) const;
    /// Edge-bit masks aligned with circuits (ground_size <= 64 only).
    std::vector<std::uint64_t> masks() const;
};

CircuitFamily make_circuit_family(int ground_size, std::vector<EdgeSet> sets);

/// The five circuit shapes of M(G,B,L,F): balanced cycles, all-unbalanced
/// thetas, tight handcuffs, bracelets with both cycles in L, loose handcuffs
/// with both cycles in F. Throws ImproperTripartition on improper input.
CircuitFamily circuits(const Tripartition& t);

/// C(G,B,chi): balanced cycles, all-unbalanced thetas, tight handcuffs,
/// dependent bracelets, loose handcuffs over independent bracelets. With
/// check_proper=false the family is built even for an improper chi (the
/// axiom-checker tests need such families).
CircuitFamily circuits_chi(const BiasedGraph& bg, const BraceletFunction& chi,
                           bool check_proper = true);

CircuitFamily frame_circuits(const BiasedGraph& bg);
CircuitFamily lift_circuits(const BiasedGraph& bg);

/// Closed-form rank queries over a tripartitioned graph:
/// r(X) = |V(X)| - b(X) when G[X] has an F-cycle, else |V(X)| - c(X) + l(X).
struct RankOracle {
    Tripartition part;

    int rank(const EdgeSet& x) const;
    int rank_frame(const EdgeSet& x) const; // |V(X)| - b(X)
    int rank_lift(const EdgeSet& x) const;  // |V(X)| - c(X) + l(X)
    int ground_size() const { return part.graph.edge_count(); }
};

RankOracle make_rank_oracle(const Tripartition& t);

/// Independence per the subgraph characterization: forest, or a single cycle
/// lying in L, or every component unicyclic-at-most with all cycles in F.
bool is_independent(const Tripartition& t, const EdgeSet& x);

/// All maximal independent sets. Throws GroundSetTooLarge above ground_cap.
std::vector<EdgeSet> bases(const Tripartition& t, int ground_cap = 16);

/// x plus every e with a circuit through e inside x + e.
EdgeSet closure(const CircuitFamily& cf, const EdgeSet& x);

/// The four cocircuit forms: minimal balancing sets; balanced/unbalanced
/// bonds; all-L bonds; K + balancing-set-of-X separators with all-F
/// satellites. Requires a proper non-degenerate tripartition on a connected
/// graph (DegenerateTripartition / DisconnectedGraph otherwise).
std::vector<EdgeSet> cocircuits(const Tripartition& t);

struct FrameworkReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// The four framework axioms for g against the circuit family cf.
FrameworkReport framework_check(const CircuitFamily& cf, const Multigraph& g);

/// Matroid rank of a set computed greedily from the circuit list.
int rank_from_circuits(const CircuitFamily& cf, const EdgeSet& x);

/// Drops duplicates and proper supersets; quadratic, for small families.
std::vector<EdgeSet> remove_non_minimal(std::vector<EdgeSet> sets);

} // namespace qgm

#endif
