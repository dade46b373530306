#include "qgm/bias.hpp"

#include <algorithm>
#include <string>

namespace qgm {

std::vector<int> BiasedGraph::unbalanced_indices() const {
    std::vector<int> out;
    for (int i = 0; i < cat.size(); ++i) {
        if (!balanced[i]) out.push_back(i);
    }
    return out;
}

bool BiasedGraph::all_balanced() const {
    return std::all_of(balanced.begin(), balanced.end(), [](char b) { return b != 0; });
}

BiasedGraph make_biased_graph(Multigraph g, const std::vector<Cycle>& balanced_cycles,
                              long cycle_limit) {
    BiasedGraph bg;
    bg.cat = make_catalog(g, enumerate_cycles(g, cycle_limit));
    bg.graph = std::move(g);
    bg.balanced.assign(bg.cat.size(), 0);
    for (const auto& c : balanced_cycles) {
        int idx = bg.cat.find(c);
        if (idx < 0) {
            throw Error(ErrorKind::InvalidInput, "balanced set lists a non-cycle");
        }
        bg.balanced[idx] = 1;
    }
    return bg;
}

namespace {

// Two distinct cycles form a theta iff they share an edge and the union has
// cyclomatic number 2; the third cycle is then their symmetric difference.
bool theta_pair(const BiasedGraph& bg, int i, int j) {
    const auto& cat = bg.cat;
    if (cat.edge_masks_ok && cat.vertex_masks_ok) {
        std::uint64_t ei = cat.edge_mask[i], ej = cat.edge_mask[j];
        if ((ei & ej) == 0) return false;
        return __builtin_popcountll(ei | ej) ==
               __builtin_popcountll(cat.vertex_mask[i] | cat.vertex_mask[j]) + 1;
    }
    const auto& ci = cat.cycles[i];
    const auto& cj = cat.cycles[j];
    if (!intersects(ci, cj)) return false;
    EdgeSet u = set_union(ci, cj);
    return static_cast<int>(u.size()) ==
           static_cast<int>(incident_vertices(bg.graph, u).size()) + 1;
}

} // namespace

ThetaResult check_theta_property(const BiasedGraph& bg) {
    ThetaResult res;
    std::vector<int> bal;
    for (int i = 0; i < bg.cat.size(); ++i) {
        if (bg.balanced[i]) bal.push_back(i);
    }
    // A violating theta has exactly two balanced cycles, and any two cycles of
    // a theta share an edge, so scanning balanced pairs is exhaustive.
    for (std::size_t a = 0; a < bal.size(); ++a) {
        for (std::size_t b = a + 1; b < bal.size(); ++b) {
            int i = bal[a], j = bal[b];
            if (!theta_pair(bg, i, j)) continue;
            Cycle third = symmetric_difference(bg.cat.cycles[i], bg.cat.cycles[j]);
            int k = bg.cat.find(third);
            if (k < 0) {
                throw Error(ErrorKind::InvalidInput, "theta third cycle missing from catalog");
            }
            if (!bg.balanced[k]) {
                res.ok = false;
                res.theta = set_union(bg.cat.cycles[i], bg.cat.cycles[j]);
                res.cycles = {bg.cat.cycles[i], bg.cat.cycles[j], third};
                return res;
            }
        }
    }
    return res;
}

bool is_balanced(const BiasedGraph& bg, const EdgeSet& x) {
    if (bg.cat.edge_masks_ok) {
        std::uint64_t xm = edge_bits(x);
        for (int i = 0; i < bg.cat.size(); ++i) {
            if (!bg.balanced[i] && (bg.cat.edge_mask[i] & ~xm) == 0) return false;
        }
        return true;
    }
    for (int i = 0; i < bg.cat.size(); ++i) {
        if (!bg.balanced[i] && is_subset(bg.cat.cycles[i], x)) return false;
    }
    return true;
}

int balanced_components(const BiasedGraph& bg, const EdgeSet& x) {
    auto comps = components(bg.graph, x);
    int b = 0;
    for (const auto& comp : comps) {
        if (is_balanced(bg, comp)) ++b;
    }
    return b;
}

namespace {

// X balances (G,B) iff X meets every unbalanced cycle.
bool hits_all_unbalanced(const BiasedGraph& bg, const std::vector<int>& unbal,
                         std::uint64_t xm, const EdgeSet& x) {
    if (bg.cat.edge_masks_ok) {
        for (int i : unbal) {
            if ((bg.cat.edge_mask[i] & xm) == 0) return false;
        }
        return true;
    }
    for (int i : unbal) {
        if (!intersects(bg.cat.cycles[i], x)) return false;
    }
    return true;
}

} // namespace

std::vector<EdgeSet> minimal_balancing_sets(const BiasedGraph& bg, int max_size, long eval_cap) {
    auto unbal = bg.unbalanced_indices();
    if (unbal.empty()) {
        throw Error(ErrorKind::GraphBalanced, "every cycle is balanced");
    }
    int m = bg.graph.edge_count();
    if (max_size < 0 || max_size > m) max_size = m;

    std::vector<EdgeSet> found;
    long evals = 0;
    std::vector<int> pick;
    // enumerate subsets by size; prune supersets of already found minimal sets
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            if (++evals > eval_cap) {
                throw Error(ErrorKind::SearchCapExceeded,
                            "candidate cap " + std::to_string(eval_cap) + " hit");
            }
            EdgeSet x = pick;
            for (const auto& f : found) {
                if (is_subset(f, x)) return;
            }
            if (hits_all_unbalanced(bg, unbal, bg.cat.edge_masks_ok ? edge_bits(x) : 0, x)) {
                found.push_back(x);
            }
            return;
        }
        for (int e = start; e <= m - remaining; ++e) {
            pick.push_back(e);
            self(self, e + 1, remaining - 1);
            pick.pop_back();
        }
    };
    for (int size = 1; size <= max_size; ++size) {
        rec(rec, 0, size);
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::vector<int> balancing_vertices(const BiasedGraph& bg) {
    auto unbal = bg.unbalanced_indices();
    if (unbal.empty()) return {};
    std::vector<int> out;
    for (int v = 0; v < bg.graph.vertex_count; ++v) {
        bool on_all = true;
        for (int i : unbal) {
            if (bg.cat.vertex_masks_ok) {
                if ((bg.cat.vertex_mask[i] >> v & 1) == 0) {
                    on_all = false;
                    break;
                }
            } else {
                auto vs = incident_vertices(bg.graph, bg.cat.cycles[i]);
                if (!std::binary_search(vs.begin(), vs.end(), v)) {
                    on_all = false;
                    break;
                }
            }
        }
        if (on_all) out.push_back(v);
    }
    return out;
}

} // namespace qgm
