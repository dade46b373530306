#include "qgm/tripartition.hpp"

#include <algorithm>

namespace qgm {

const char* to_string(CycleClass cls) {
    switch (cls) {
        case CycleClass::Balanced: return "B";
        case CycleClass::Lift: return "L";
        case CycleClass::Frame: return "F";
    }
    return "?";
}

std::vector<int> Tripartition::indices_of(CycleClass c) const {
    std::vector<int> out;
    for (int i = 0; i < cat.size(); ++i) {
        if (cls[i] == c) out.push_back(i);
    }
    return out;
}

std::vector<Cycle> Tripartition::cycles_of(CycleClass c) const {
    std::vector<Cycle> out;
    for (int i = 0; i < cat.size(); ++i) {
        if (cls[i] == c) out.push_back(cat.cycles[i]);
    }
    return out;
}

BiasedGraph Tripartition::biased() const {
    BiasedGraph bg;
    bg.graph = graph;
    bg.cat = cat;
    bg.balanced.resize(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) {
        bg.balanced[i] = cls[i] == CycleClass::Balanced ? 1 : 0;
    }
    return bg;
}

Tripartition make_tripartition(Multigraph g, const std::vector<Cycle>& balanced,
                               const std::vector<Cycle>& lift, const std::vector<Cycle>& frame,
                               long cycle_limit) {
    Tripartition t;
    t.cat = make_catalog(g, enumerate_cycles(g, cycle_limit));
    t.graph = std::move(g);
    t.cls.assign(t.cat.size(), CycleClass::Balanced);
    std::vector<char> assigned(t.cat.size(), 0);
    auto place = [&](const std::vector<Cycle>& list, CycleClass c) {
        for (const auto& cyc : list) {
            int idx = t.cat.find(cyc);
            if (idx < 0) throw Error(ErrorKind::InvalidInput, "listed set is not a cycle");
            if (assigned[idx]) throw Error(ErrorKind::InvalidInput, "cycle assigned twice");
            assigned[idx] = 1;
            t.cls[idx] = c;
        }
    };
    place(balanced, CycleClass::Balanced);
    place(lift, CycleClass::Lift);
    place(frame, CycleClass::Frame);
    if (!std::all_of(assigned.begin(), assigned.end(), [](char a) { return a != 0; })) {
        throw Error(ErrorKind::InvalidInput, "tripartition does not cover every cycle");
    }
    return t;
}

Tripartition degenerate_tripartition(const BiasedGraph& bg, CycleClass side) {
    if (side == CycleClass::Balanced) {
        throw Error(ErrorKind::InvalidInput, "side must be L or F");
    }
    Tripartition t;
    t.graph = bg.graph;
    t.cat = bg.cat;
    t.cls.resize(bg.balanced.size());
    for (std::size_t i = 0; i < bg.balanced.size(); ++i) {
        t.cls[i] = bg.balanced[i] ? CycleClass::Balanced : side;
    }
    return t;
}

TripartitionValidation validate_proper(const Tripartition& t) {
    TripartitionValidation out;
    auto theta = check_theta_property(t.biased());
    if (!theta.ok) {
        out.kind = ProprietyViolation::Theta;
        out.theta = theta;
        return out;
    }
    auto lifts = t.indices_of(CycleClass::Lift);
    auto frames = t.indices_of(CycleClass::Frame);
    const auto& cat = t.cat;
    for (int i : lifts) {
        for (int j : frames) {
            bool meet;
            if (cat.vertex_masks_ok) {
                meet = (cat.vertex_mask[i] & cat.vertex_mask[j]) != 0;
            } else {
                auto vi = incident_vertices(t.graph, cat.cycles[i]);
                auto vj = incident_vertices(t.graph, cat.cycles[j]);
                std::vector<int> tmp;
                std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                                      std::back_inserter(tmp));
                meet = !tmp.empty();
            }
            if (!meet) {
                out.kind = ProprietyViolation::Meet;
                out.lift_cycle = cat.cycles[i];
                out.frame_cycle = cat.cycles[j];
                return out;
            }
        }
    }
    return out;
}

void require_proper(const Tripartition& t) {
    auto v = validate_proper(t);
    if (v.kind == ProprietyViolation::Theta) {
        throw Error(ErrorKind::ImproperTripartition, "theta property violated");
    }
    if (v.kind == ProprietyViolation::Meet) {
        throw Error(ErrorKind::ImproperTripartition, "vertex-disjoint L/F cycle pair");
    }
}

bool is_degenerate(const Tripartition& t, CycleClass side) {
    auto ids = t.indices_of(side);
    if (ids.empty()) return true;
    const auto& cat = t.cat;
    for (std::size_t p = 0; p < ids.size(); ++p) {
        for (std::size_t q = p + 1; q < ids.size(); ++q) {
            bool disjoint;
            if (cat.vertex_masks_ok) {
                disjoint = (cat.vertex_mask[ids[p]] & cat.vertex_mask[ids[q]]) == 0;
            } else {
                auto vi = incident_vertices(t.graph, cat.cycles[ids[p]]);
                auto vj = incident_vertices(t.graph, cat.cycles[ids[q]]);
                std::vector<int> tmp;
                std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                                      std::back_inserter(tmp));
                disjoint = tmp.empty();
            }
            if (disjoint) return false;
        }
    }
    return true;
}

BraceletFunction chi_from_tripartition(const Tripartition& t) {
    require_proper(t);
    BraceletFunction chi;
    chi.bracelets = enumerate_bracelets(t.biased());
    chi.dependent.reserve(chi.bracelets.size());
    for (const auto& br : chi.bracelets) {
        bool both_lift = t.cls[br.a] == CycleClass::Lift && t.cls[br.b] == CycleClass::Lift;
        bool both_frame = t.cls[br.a] == CycleClass::Frame && t.cls[br.b] == CycleClass::Frame;
        if (!both_lift && !both_frame) {
            // cannot happen for a proper tripartition
            throw Error(ErrorKind::ImproperTripartition, "bracelet with mixed L/F cycles");
        }
        chi.dependent.push_back(both_lift ? 1 : 0);
    }
    return chi;
}

Tripartition tripartition_from_chi(const BiasedGraph& bg, const BraceletFunction& chi) {
    if (!is_connected(bg.graph)) {
        throw Error(ErrorKind::DisconnectedGraph, "tripartition_from_chi needs a connected graph");
    }
    auto prop = is_proper(bg, chi);
    if (!prop.ok) {
        throw Error(ErrorKind::ImproperChi, "bracelet function not constant on a component");
    }
    Tripartition t;
    t.graph = bg.graph;
    t.cat = bg.cat;
    t.cls.resize(bg.balanced.size());
    for (std::size_t i = 0; i < bg.balanced.size(); ++i) {
        t.cls[i] = bg.balanced[i] ? CycleClass::Balanced : CycleClass::Frame;
    }
    for (std::size_t k = 0; k < chi.bracelets.size(); ++k) {
        if (chi.dependent[k]) {
            t.cls[chi.bracelets[k].a] = CycleClass::Lift;
            t.cls[chi.bracelets[k].b] = CycleClass::Lift;
        }
    }
    require_proper(t);
    return t;
}

} // namespace qgm
