#include "qgm/constructions.hpp"

#include <algorithm>
#include <string>

namespace qgm {

namespace {

// Rebuilds a tripartition on a minor graph, resolving each new cycle's class
// through `classify`, which receives the cycle in old edge indices.
template <typename Classify>
Tripartition retripartition(Multigraph new_graph, const std::vector<int>& new_to_old,
                            Classify classify) {
    Tripartition t;
    t.cat = make_catalog(new_graph, enumerate_cycles(new_graph));
    t.graph = std::move(new_graph);
    t.cls.reserve(t.cat.size());
    for (const auto& c : t.cat.cycles) {
        EdgeSet old_edges;
        old_edges.reserve(c.size());
        for (int e : c) old_edges.push_back(new_to_old[e]);
        std::sort(old_edges.begin(), old_edges.end());
        t.cls.push_back(classify(old_edges));
    }
    return t;
}

} // namespace

MinorResult delete_edge(const Tripartition& t, int e) {
    if (e < 0 || e >= t.graph.edge_count()) {
        throw Error(ErrorKind::InvalidInput, "edge index out of range");
    }
    Multigraph g;
    g.vertex_count = t.graph.vertex_count;
    std::vector<int> edge_map(t.graph.edge_count(), -1);
    std::vector<int> new_to_old;
    for (int f = 0; f < t.graph.edge_count(); ++f) {
        if (f == e) continue;
        edge_map[f] = g.edge_count();
        new_to_old.push_back(f);
        g.edges.push_back(t.graph.edges[f]);
    }
    MinorResult out{retripartition(std::move(g), new_to_old,
                                   [&](const EdgeSet& old_edges) {
                                       int idx = t.cat.find(old_edges);
                                       if (idx < 0) {
                                           throw Error(ErrorKind::InvalidInput,
                                                       "deletion produced an unknown cycle");
                                       }
                                       return t.cls[idx];
                                   }),
                    std::move(edge_map)};
    return out;
}

MinorResult contract_edge(const Tripartition& t, int e) {
    if (e < 0 || e >= t.graph.edge_count()) {
        throw Error(ErrorKind::InvalidInput, "edge index out of range");
    }
    if (t.graph.is_loop(e)) {
        throw Error(ErrorKind::LoopContraction,
                    "graph-level contraction of a loop; use minor_circuits");
    }
    auto [u, v] = t.graph.edges[e];
    // merge v into u, shift ids above v down
    auto remap = [&](int w) {
        if (w == v) w = u;
        return w - (w > v ? 1 : 0);
    };
    Multigraph g;
    g.vertex_count = t.graph.vertex_count - 1;
    std::vector<int> edge_map(t.graph.edge_count(), -1);
    std::vector<int> new_to_old;
    for (int f = 0; f < t.graph.edge_count(); ++f) {
        if (f == e) continue;
        edge_map[f] = g.edge_count();
        new_to_old.push_back(f);
        g.edges.emplace_back(remap(t.graph.edges[f].first), remap(t.graph.edges[f].second));
    }
    MinorResult out{retripartition(std::move(g), new_to_old,
                                   [&](const EdgeSet& old_edges) {
                                       int idx = t.cat.find(old_edges);
                                       if (idx >= 0) return t.cls[idx];
                                       idx = t.cat.find(set_union(old_edges, {e}));
                                       if (idx >= 0) return t.cls[idx];
                                       throw Error(ErrorKind::InvalidInput,
                                                   "contraction produced an unknown cycle");
                                   }),
                    std::move(edge_map)};
    return out;
}

CircuitFamily minor_circuits(const CircuitFamily& cf, const EdgeSet& deletions,
                             const EdgeSet& contractions, std::vector<int>* edge_map) {
    if (intersects(deletions, contractions)) {
        throw Error(ErrorKind::InvalidInput, "deletions and contractions overlap");
    }
    std::vector<int> old_to_new(cf.ground_size, -1);
    int next = 0;
    for (int e = 0; e < cf.ground_size; ++e) {
        if (!contains(deletions, e) && !contains(contractions, e)) old_to_new[e] = next++;
    }
    if (edge_map) *edge_map = old_to_new;

    // delete: keep circuits avoiding D; contract: minimal nonempty X - C
    std::vector<EdgeSet> candidates;
    for (const auto& x : cf.circuits) {
        if (intersects(x, deletions)) continue;
        EdgeSet reduced = set_minus(x, contractions);
        if (reduced.empty()) continue;
        candidates.push_back(std::move(reduced));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<char> keep(candidates.size(), 1);
    if (cf.ground_size <= 64) {
        std::vector<std::uint64_t> ms;
        ms.reserve(candidates.size());
        for (const auto& x : candidates) ms.push_back(edge_bits(x));
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            for (std::size_t b = 0; b < candidates.size(); ++b) {
                if (a != b && ms[b] != ms[a] && (ms[b] & ~ms[a]) == 0) {
                    keep[a] = 0;
                    break;
                }
            }
        }
    } else {
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            for (std::size_t b = 0; b < candidates.size(); ++b) {
                if (a != b && candidates[b] != candidates[a] &&
                    is_subset(candidates[b], candidates[a])) {
                    keep[a] = 0;
                    break;
                }
            }
        }
    }
    std::vector<EdgeSet> minimal;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
        if (!keep[a]) continue;
        EdgeSet relabeled;
        relabeled.reserve(candidates[a].size());
        for (int e : candidates[a]) relabeled.push_back(old_to_new[e]);
        minimal.push_back(std::move(relabeled));
    }
    return make_circuit_family(next, std::move(minimal));
}

CircuitFamily two_sum_circuits(const CircuitFamily& m1, int e1, const CircuitFamily& m2, int e2) {
    int n1 = m1.ground_size - 1;
    auto relabel1 = [&](int e) { return e - (e > e1 ? 1 : 0); };
    auto relabel2 = [&](int e) { return n1 + e - (e > e2 ? 1 : 0); };
    std::vector<EdgeSet> out;
    std::vector<EdgeSet> through1, through2;
    for (const auto& c : m1.circuits) {
        if (contains(c, e1)) {
            EdgeSet r;
            for (int e : c)
                if (e != e1) r.push_back(relabel1(e));
            through1.push_back(std::move(r));
        } else {
            EdgeSet r;
            for (int e : c) r.push_back(relabel1(e));
            out.push_back(std::move(r));
        }
    }
    for (const auto& c : m2.circuits) {
        if (contains(c, e2)) {
            EdgeSet r;
            for (int e : c)
                if (e != e2) r.push_back(relabel2(e));
            through2.push_back(std::move(r));
        } else {
            EdgeSet r;
            for (int e : c) r.push_back(relabel2(e));
            out.push_back(std::move(r));
        }
    }
    for (const auto& a : through1) {
        for (const auto& b : through2) {
            out.push_back(set_union(a, b));
        }
    }
    return make_circuit_family(n1 + m2.ground_size - 1, std::move(out));
}

LinkSumResult link_sum(const Tripartition& t1, int e1, const Multigraph& g2, int e2) {
    const Multigraph& g1 = t1.graph;
    if (e1 < 0 || e1 >= g1.edge_count() || g1.is_loop(e1)) {
        throw Error(ErrorKind::BasepointNotLink, "first basepoint must be a link");
    }
    if (e2 < 0 || e2 >= g2.edge_count() || g2.is_loop(e2)) {
        throw Error(ErrorKind::BasepointNotLink, "second basepoint must be a link");
    }
    auto [u1, v1] = g1.edges[e1];
    auto [u2, v2] = g2.edges[e2];

    // glued graph: G1's vertices keep ids; G2's vertices map u2->u1, v2->v1,
    // the rest append in id order
    std::vector<int> vmap2(g2.vertex_count, -1);
    vmap2[u2] = u1;
    vmap2[v2] = v1;
    int next_v = g1.vertex_count;
    for (int w = 0; w < g2.vertex_count; ++w) {
        if (vmap2[w] < 0) vmap2[w] = next_v++;
    }
    Multigraph glued;
    glued.vertex_count = next_v;
    std::vector<int> map1(g1.edge_count(), -1), map2(g2.edge_count(), -1);
    std::vector<int> origin; // glued edge -> old id (G1 edges <, G2 edges >= g1.edge_count())
    for (int f = 0; f < g1.edge_count(); ++f) {
        if (f == e1) continue;
        map1[f] = glued.edge_count();
        origin.push_back(f);
        glued.edges.push_back(g1.edges[f]);
    }
    int g2_base = g1.edge_count();
    for (int f = 0; f < g2.edge_count(); ++f) {
        if (f == e2) continue;
        map2[f] = glued.edge_count();
        origin.push_back(g2_base + f);
        glued.edges.emplace_back(vmap2[g2.edges[f].first], vmap2[g2.edges[f].second]);
    }

    // classify glued cycles: inside G1 -> old class; inside G2 -> balanced;
    // crossing -> class of (G1 part + e1), a cycle of G1
    Tripartition part = retripartition(
        std::move(glued), origin, [&](const EdgeSet& old_edges) -> CycleClass {
            EdgeSet part1, part2;
            for (int e : old_edges) {
                (e < g2_base ? part1 : part2).push_back(e);
            }
            if (part2.empty()) {
                int idx = t1.cat.find(part1);
                if (idx < 0) throw Error(ErrorKind::InvalidInput, "unknown G1 cycle in link sum");
                return t1.cls[idx];
            }
            if (part1.empty()) return CycleClass::Balanced;
            int idx = t1.cat.find(set_union(part1, {e1}));
            if (idx < 0) throw Error(ErrorKind::InvalidInput, "unknown crossing cycle");
            return t1.cls[idx];
        });
    return LinkSumResult{std::move(part), std::move(map1), std::move(map2)};
}

LoopSumResult loop_sum(const BiasedGraph& bg1, int e1, const BraceletFunction& chi1,
                       const BiasedGraph& bg2, int e2, const BraceletFunction& chi2) {
    auto check_loop = [](const BiasedGraph& bg, int e) {
        if (e < 0 || e >= bg.graph.edge_count() || !bg.graph.is_loop(e)) {
            throw Error(ErrorKind::BasepointNotUnbalancedLoop, "basepoint must be a loop");
        }
        int idx = bg.cat.find({e});
        if (idx < 0 || bg.balanced[idx]) {
            throw Error(ErrorKind::BasepointNotUnbalancedLoop, "basepoint loop must be unbalanced");
        }
    };
    check_loop(bg1, e1);
    check_loop(bg2, e2);

    const Multigraph& g1 = bg1.graph;
    const Multigraph& g2 = bg2.graph;
    int w1 = g1.edges[e1].first;
    int w2 = g2.edges[e2].first;
    std::vector<int> vmap2(g2.vertex_count, -1);
    vmap2[w2] = w1;
    int next_v = g1.vertex_count;
    for (int w = 0; w < g2.vertex_count; ++w) {
        if (vmap2[w] < 0) vmap2[w] = next_v++;
    }
    LoopSumResult out;
    out.graph.vertex_count = next_v;
    out.map1.assign(g1.edge_count(), -1);
    out.map2.assign(g2.edge_count(), -1);
    for (int f = 0; f < g1.edge_count(); ++f) {
        if (f == e1) continue;
        out.map1[f] = out.graph.edge_count();
        out.graph.edges.push_back(g1.edges[f]);
    }
    for (int f = 0; f < g2.edge_count(); ++f) {
        if (f == e2) continue;
        out.map2[f] = out.graph.edge_count();
        out.graph.edges.emplace_back(vmap2[g2.edges[f].first], vmap2[g2.edges[f].second]);
    }
    out.circuits =
        two_sum_circuits(circuits_chi(bg1, chi1), e1, circuits_chi(bg2, chi2), e2);
    return out;
}

BrokenHandcuffResult broken_handcuff(const BiasedGraph& core,
                                     const std::vector<std::pair<int, BiasedGraph>>& satellites) {
    std::vector<char> used(core.graph.vertex_count, 0);
    for (const auto& [v, bg] : satellites) {
        if (v < 0 || v >= core.graph.vertex_count) {
            throw Error(ErrorKind::EdgeSetCollision, "attach vertex out of range");
        }
        if (used[v]) {
            throw Error(ErrorKind::EdgeSetCollision,
                        "two satellites attach at vertex " + std::to_string(v));
        }
        used[v] = 1;
        (void)bg;
    }

    BrokenHandcuffResult out;
    int ground = core.graph.edge_count();
    for (const auto& [v, bg] : satellites) {
        (void)v;
        out.satellite_offset.push_back(ground);
        ground += bg.graph.edge_count();
    }

    std::vector<EdgeSet> sets;
    // (1) frame circuits of the core
    for (auto& c : frame_circuits(core).circuits) sets.push_back(std::move(c));
    // (2) lift circuits of each satellite, offset into the combined ground set
    for (std::size_t s = 0; s < satellites.size(); ++s) {
        int off = out.satellite_offset[s];
        for (auto& c : lift_circuits(satellites[s].second).circuits) {
            for (int& e : c) e += off;
            sets.push_back(std::move(c));
        }
    }

    // minimal (v -> target vertex set) paths in the core, interior avoiding
    // the target and v itself
    std::vector<std::vector<std::pair<int, int>>> adj(core.graph.vertex_count);
    for (int e = 0; e < core.graph.edge_count(); ++e) {
        auto [a, b] = core.graph.edges[e];
        if (a == b) continue;
        adj[a].emplace_back(e, b);
        adj[b].emplace_back(e, a);
    }
    auto paths_to_set = [&](int from, const std::vector<int>& targets_sorted) {
        std::vector<EdgeSet> out_paths;
        auto is_target = [&](int w) {
            return std::binary_search(targets_sorted.begin(), targets_sorted.end(), w);
        };
        if (is_target(from)) {
            out_paths.push_back({}); // trivial path
            return out_paths;
        }
        std::vector<char> used_v(core.graph.vertex_count, 0);
        used_v[from] = 1;
        std::vector<int> path;
        auto dfs = [&](auto&& self, int v) -> void {
            for (auto [e, w] : adj[v]) {
                if (is_target(w)) {
                    path.push_back(e);
                    out_paths.push_back(edge_set(path));
                    path.pop_back();
                    continue;
                }
                if (used_v[w]) continue;
                used_v[w] = 1;
                path.push_back(e);
                self(self, w);
                path.pop_back();
                used_v[w] = 0;
            }
        };
        dfs(dfs, from);
        return out_paths;
    };

    // (3) core unbalanced cycle + satellite unbalanced cycle + (v-C)-path
    for (std::size_t s = 0; s < satellites.size(); ++s) {
        int v = satellites[s].first;
        const BiasedGraph& sat = satellites[s].second;
        int off = out.satellite_offset[s];
        for (int ci = 0; ci < core.cat.size(); ++ci) {
            if (core.balanced[ci]) continue;
            auto cyc_vertices = incident_vertices(core.graph, core.cat.cycles[ci]);
            auto paths = paths_to_set(v, cyc_vertices);
            for (int si : sat.unbalanced_indices()) {
                EdgeSet sat_cycle = sat.cat.cycles[si];
                for (int& e : sat_cycle) e += off;
                for (const auto& p : paths) {
                    sets.push_back(set_union(set_union(core.cat.cycles[ci], p), sat_cycle));
                }
            }
        }
    }

    // (4) two satellite unbalanced cycles + a (v-w)-path in the core
    for (std::size_t s1 = 0; s1 < satellites.size(); ++s1) {
        for (std::size_t s2 = s1 + 1; s2 < satellites.size(); ++s2) {
            int v = satellites[s1].first;
            int w = satellites[s2].first;
            auto paths = paths_to_set(v, {w});
            const BiasedGraph& a = satellites[s1].second;
            const BiasedGraph& b = satellites[s2].second;
            for (int ai : a.unbalanced_indices()) {
                EdgeSet ca = a.cat.cycles[ai];
                for (int& e : ca) e += out.satellite_offset[s1];
                for (int bi : b.unbalanced_indices()) {
                    EdgeSet cb = b.cat.cycles[bi];
                    for (int& e : cb) e += out.satellite_offset[s2];
                    for (const auto& p : paths) {
                        sets.push_back(set_union(set_union(ca, p), cb));
                    }
                }
            }
        }
    }
    out.circuits = make_circuit_family(ground, remove_non_minimal(std::move(sets)));
    return out;
}

} // namespace qgm
