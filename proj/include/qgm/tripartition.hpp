#ifndef QGM_TRIPARTITION_HPP
#define QGM_TRIPARTITION_HPP

#include <vector>

#include "qgm/bracelets.hpp"

namespace qgm {

enum class CycleClass : unsigned char { Balanced, Lift, Frame };

const char* to_string(CycleClass cls);

/// A graph with every cycle assigned to B (balanced), L (lift side) or F
/// (frame side). Propriety -- theta property on B plus every L-cycle meeting
/// every F-cycle -- is checked by validate_proper.
struct Tripartition {
    Multigraph graph;
    CycleCatalog cat;
    std::vector<CycleClass> cls; // aligned with cat.cycles

    std::vector<int> indices_of(CycleClass c) const;
    std::vector<Cycle> cycles_of(CycleClass c) const;
    BiasedGraph biased() const;
};

/// Builds a tripartition from explicit cycle lists; the three lists must
/// partition the cycles of g exactly (InvalidInput otherwise).
Tripartition make_tripartition(Multigraph g, const std::vector<Cycle>& balanced,
                               const std::vector<Cycle>& lift, const std::vector<Cycle>& frame,
                               long cycle_limit = 0);

/// Same ambient graph and bias, every unbalanced cycle assigned to one side.
Tripartition degenerate_tripartition(const BiasedGraph& bg, CycleClass side);

enum class ProprietyViolation { None, Theta, Meet };

struct TripartitionValidation {
    ProprietyViolation kind = ProprietyViolation::None;
    bool ok() const { return kind == ProprietyViolation::None; }
    // Theta: witness theta and its three cycles (two balanced, one not).
    ThetaResult theta;
    // Meet: a vertex-disjoint L/F pair.
    Cycle lift_cycle, frame_cycle;
};

TripartitionValidation validate_proper(const Tripartition& t);

void require_proper(const Tripartition& t); // throws ImproperTripartition

/// True iff the side is empty or contains no two vertex-disjoint cycles.
bool is_degenerate(const Tripartition& t, CycleClass side);

/// dependent iff both cycles in L, independent iff both in F; total because
/// propriety forbids mixed bracelets. Throws ImproperTripartition.
BraceletFunction chi_from_tripartition(const Tripartition& t);

/// L = unbalanced cycles lying in some dependent bracelet, F = the rest
/// (bracelet-free unbalanced cycles land in F). Requires chi proper and g
/// connected; the result passes validate_proper.
Tripartition tripartition_from_chi(const BiasedGraph& bg, const BraceletFunction& chi);

} // namespace qgm

#endif
