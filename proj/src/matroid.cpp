#include "qgm/matroid.hpp"

#include <algorithm>
#include <unordered_set>

namespace qgm {

bool CircuitFamily::has(const EdgeSet& x) const {
    return std::binary_search(circuits.begin(), circuits.end(), x);
}

std::vector<std::uint64_t> CircuitFamily::masks() const {
    if (ground_size > 64) {
        throw Error(ErrorKind::CapExceeded, "ground set too large for masks");
    }
    std::vector<std::uint64_t> out;
    out.reserve(circuits.size());
    for (const auto& c : circuits) out.push_back(edge_bits(c));
    return out;
}

CircuitFamily make_circuit_family(int ground_size, std::vector<EdgeSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    CircuitFamily cf;
    cf.ground_size = ground_size;
    cf.circuits = std::move(sets);
    return cf;
}

namespace {

struct Generated {
    std::vector<EdgeSet> sets;
    // loose handcuff -> generating bracelet union, for the minimality pass
    std::vector<std::pair<EdgeSet, EdgeSet>> loose_with_bracelet;
};

// Shared circuit generator. include_bracelet / include_loose decide, per
// bracelet, whether the bracelet itself or its loose handcuffs are circuits.
template <typename BraceletDep, typename LooseSel>
Generated generate_circuits(const Multigraph& g, const CycleCatalog& cat,
                            const std::vector<char>& balanced, BraceletDep bracelet_dependent,
                            LooseSel loose_selected) {
    if (!cat.edge_masks_ok || !cat.vertex_masks_ok) {
        throw Error(ErrorKind::CapExceeded, "circuit generation needs <=64 edges and vertices");
    }
    Generated out;
    std::vector<int> unbal;
    for (int i = 0; i < cat.size(); ++i) {
        if (balanced[i]) {
            out.sets.push_back(cat.cycles[i]);
        } else {
            unbal.push_back(i);
        }
    }

    std::unordered_set<std::uint64_t> theta_seen;
    std::vector<std::pair<int, int>> loose_pairs;
    for (std::size_t p = 0; p < unbal.size(); ++p) {
        for (std::size_t q = p + 1; q < unbal.size(); ++q) {
            int i = unbal[p], j = unbal[q];
            std::uint64_t shared_v = cat.vertex_mask[i] & cat.vertex_mask[j];
            if (shared_v == 0) {
                if (bracelet_dependent(i, j)) {
                    out.sets.push_back(set_union(cat.cycles[i], cat.cycles[j]));
                }
                if (loose_selected(i, j)) loose_pairs.emplace_back(i, j);
                continue;
            }
            std::uint64_t shared_e = cat.edge_mask[i] & cat.edge_mask[j];
            std::uint64_t em = cat.edge_mask[i] | cat.edge_mask[j];
            std::uint64_t vm = cat.vertex_mask[i] | cat.vertex_mask[j];
            if (shared_e != 0) {
                // theta iff the connected union has cyclomatic number 2
                if (__builtin_popcountll(em) == __builtin_popcountll(vm) + 1) {
                    int third = cat.find(edges_from_bits(cat.edge_mask[i] ^ cat.edge_mask[j]));
                    if (third >= 0 && !balanced[third] && theta_seen.insert(em).second) {
                        out.sets.push_back(edges_from_bits(em));
                    }
                }
            } else if (__builtin_popcountll(shared_v) == 1) {
                // tight handcuff: edge-disjoint, exactly one shared vertex
                out.sets.push_back(set_union(cat.cycles[i], cat.cycles[j]));
            }
        }
    }

    // loose handcuffs: every simple connecting path whose interior avoids both
    // cycles, enumerated from the first cycle's side
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edges[e];
        if (a == b) continue;
        adj[a].emplace_back(e, b);
        adj[b].emplace_back(e, a);
    }
    for (auto [i, j] : loose_pairs) {
        std::uint64_t va = cat.vertex_mask[i], vb = cat.vertex_mask[j];
        EdgeSet bracelet_union = set_union(cat.cycles[i], cat.cycles[j]);
        std::vector<int> path;
        std::uint64_t used = 0;
        auto dfs = [&](auto&& self, int v) -> void {
            for (auto [e, w] : adj[v]) {
                if (va >> w & 1) continue; // back into the first cycle
                if (vb >> w & 1) {
                    path.push_back(e);
                    EdgeSet pe = edge_set(path);
                    out.sets.push_back(set_union(bracelet_union, pe));
                    out.loose_with_bracelet.emplace_back(out.sets.back(), bracelet_union);
                    path.pop_back();
                    continue;
                }
                if (used >> w & 1) continue;
                used |= std::uint64_t(1) << w;
                path.push_back(e);
                self(self, w);
                path.pop_back();
                used &= ~(std::uint64_t(1) << w);
            }
        };
        for (int x = 0; x < g.vertex_count; ++x) {
            if ((va >> x & 1) == 0) continue;
            path.clear();
            used = 0;
            dfs(dfs, x);
        }
    }
    return out;
}

void verify_incomparable(Generated& gen, int ground_size) {
    // Structural argument rules out containments for proper inputs; re-verify
    // the one risky pairing (a loose handcuff over a dependent bracelet) and,
    // at small scale, everything pairwise.
    std::sort(gen.sets.begin(), gen.sets.end());
    gen.sets.erase(std::unique(gen.sets.begin(), gen.sets.end()), gen.sets.end());
    auto dependent_set = [&](const EdgeSet& x) {
        return std::binary_search(gen.sets.begin(), gen.sets.end(), x);
    };
    std::vector<EdgeSet> drop;
    for (const auto& [loose, bracelet] : gen.loose_with_bracelet) {
        if (dependent_set(bracelet)) drop.push_back(loose);
    }
    if (gen.sets.size() <= 5000 && ground_size <= 64) {
        std::vector<std::uint64_t> ms;
        ms.reserve(gen.sets.size());
        for (const auto& s : gen.sets) ms.push_back(edge_bits(s));
        for (std::size_t a = 0; a < ms.size(); ++a) {
            for (std::size_t b = 0; b < ms.size(); ++b) {
                if (a != b && (ms[a] & ~ms[b]) == 0 && ms[a] != ms[b]) {
                    drop.push_back(gen.sets[b]);
                }
            }
        }
    }
    if (!drop.empty()) {
        std::sort(drop.begin(), drop.end());
        std::vector<EdgeSet> kept;
        for (auto& s : gen.sets) {
            if (!std::binary_search(drop.begin(), drop.end(), s)) kept.push_back(std::move(s));
        }
        gen.sets = std::move(kept);
    }
}

} // namespace

CircuitFamily circuits(const Tripartition& t) {
    require_proper(t);
    auto bg_balanced = [&](int i) { return t.cls[i] == CycleClass::Balanced; };
    std::vector<char> bal(t.cat.size());
    for (int i = 0; i < t.cat.size(); ++i) bal[i] = bg_balanced(i) ? 1 : 0;
    auto gen = generate_circuits(
        t.graph, t.cat, bal,
        [&](int i, int j) { return t.cls[i] == CycleClass::Lift && t.cls[j] == CycleClass::Lift; },
        [&](int i, int j) {
            return t.cls[i] == CycleClass::Frame && t.cls[j] == CycleClass::Frame;
        });
    verify_incomparable(gen, t.graph.edge_count());
    return make_circuit_family(t.graph.edge_count(), std::move(gen.sets));
}

CircuitFamily circuits_chi(const BiasedGraph& bg, const BraceletFunction& chi, bool check_proper) {
    if (check_proper) {
        auto prop = is_proper(bg, chi);
        if (!prop.ok) throw Error(ErrorKind::ImproperChi, "improper bracelet function");
    } else {
        // still insist on totality so lookups below cannot miss
        if (enumerate_bracelets(bg) != chi.bracelets) {
            throw Error(ErrorKind::InvalidInput, "bracelet function not total");
        }
    }
    auto dep = [&](int i, int j) {
        int k = chi.find({std::min(i, j), std::max(i, j)});
        return k >= 0 && chi.is_dependent(k);
    };
    auto gen = generate_circuits(bg.graph, bg.cat, bg.balanced, dep,
                                 [&](int i, int j) { return !dep(i, j); });
    verify_incomparable(gen, bg.graph.edge_count());
    return make_circuit_family(bg.graph.edge_count(), std::move(gen.sets));
}

CircuitFamily frame_circuits(const BiasedGraph& bg) {
    return circuits(degenerate_tripartition(bg, CycleClass::Frame));
}

CircuitFamily lift_circuits(const BiasedGraph& bg) {
    return circuits(degenerate_tripartition(bg, CycleClass::Lift));
}

// --- rank oracle ---

namespace {

struct SubgraphStats {
    int vertices = 0;
    int comps = 0;
    int balanced_comps = 0; // no unbalanced cycle inside
    bool has_lift = false;  // some L-cycle inside
    bool has_frame = false; // some F-cycle inside
    bool has_unbalanced = false;
};

SubgraphStats subgraph_stats(const Tripartition& t, const EdgeSet& x) {
    SubgraphStats s;
    auto comps = components(t.graph, x);
    s.comps = static_cast<int>(comps.size());
    s.vertices = static_cast<int>(incident_vertices(t.graph, x).size());
    // component id per edge
    std::vector<int> comp_of_edge(t.graph.edge_count(), -1);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        for (int e : comps[ci]) comp_of_edge[e] = static_cast<int>(ci);
    }
    std::vector<char> comp_unbal(comps.size(), 0);
    const auto& cat = t.cat;
    if (cat.edge_masks_ok) {
        std::uint64_t xm = edge_bits(x);
        for (int i = 0; i < cat.size(); ++i) {
            if ((cat.edge_mask[i] & ~xm) != 0) continue;
            switch (t.cls[i]) {
                case CycleClass::Balanced: break;
                case CycleClass::Lift:
                    s.has_lift = true;
                    s.has_unbalanced = true;
                    comp_unbal[comp_of_edge[cat.cycles[i][0]]] = 1;
                    break;
                case CycleClass::Frame:
                    s.has_frame = true;
                    s.has_unbalanced = true;
                    comp_unbal[comp_of_edge[cat.cycles[i][0]]] = 1;
                    break;
            }
        }
    } else {
        for (int i = 0; i < cat.size(); ++i) {
            if (t.cls[i] == CycleClass::Balanced) continue;
            if (!is_subset(cat.cycles[i], x)) continue;
            s.has_unbalanced = true;
            if (t.cls[i] == CycleClass::Lift) s.has_lift = true;
            else s.has_frame = true;
            comp_unbal[comp_of_edge[cat.cycles[i][0]]] = 1;
        }
    }
    for (char u : comp_unbal) {
        if (!u) ++s.balanced_comps;
    }
    return s;
}

} // namespace

int RankOracle::rank(const EdgeSet& x) const {
    validate_edge_set(part.graph, x);
    auto s = subgraph_stats(part, x);
    if (s.has_frame) return s.vertices - s.balanced_comps;
    return s.vertices - s.comps + (s.has_lift ? 1 : 0);
}

int RankOracle::rank_frame(const EdgeSet& x) const {
    auto s = subgraph_stats(part, x);
    return s.vertices - s.balanced_comps;
}

int RankOracle::rank_lift(const EdgeSet& x) const {
    auto s = subgraph_stats(part, x);
    return s.vertices - s.comps + (s.has_unbalanced ? 1 : 0);
}

RankOracle make_rank_oracle(const Tripartition& t) { return RankOracle{t}; }

bool is_independent(const Tripartition& t, const EdgeSet& x) {
    validate_edge_set(t.graph, x);
    // cycles inside x, with the component each lives in
    auto comps = components(t.graph, x);
    std::vector<int> comp_of_edge(t.graph.edge_count(), -1);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        for (int e : comps[ci]) comp_of_edge[e] = static_cast<int>(ci);
    }
    std::vector<int> inside;
    const auto& cat = t.cat;
    std::uint64_t xm = cat.edge_masks_ok ? edge_bits(x) : 0;
    for (int i = 0; i < cat.size(); ++i) {
        bool sub = cat.edge_masks_ok ? (cat.edge_mask[i] & ~xm) == 0 : is_subset(cat.cycles[i], x);
        if (sub) inside.push_back(i);
    }
    if (inside.empty()) return true; // forest
    if (inside.size() == 1 && t.cls[inside[0]] == CycleClass::Lift) return true;
    // all cycles in F, at most one per component
    std::vector<char> comp_cycle(comps.size(), 0);
    for (int i : inside) {
        if (t.cls[i] != CycleClass::Frame) return false;
        int c = comp_of_edge[cat.cycles[i][0]];
        if (comp_cycle[c]) return false;
        comp_cycle[c] = 1;
    }
    return true;
}

std::vector<EdgeSet> bases(const Tripartition& t, int ground_cap) {
    int m = t.graph.edge_count();
    if (m > ground_cap) {
        throw Error(ErrorKind::GroundSetTooLarge,
                    std::to_string(m) + " edges exceeds cap " + std::to_string(ground_cap));
    }
    RankOracle oracle{t};
    int r = oracle.rank(full_edge_set(t.graph));
    std::vector<EdgeSet> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int remaining) -> void {
        if (remaining == 0) {
            if (is_independent(t, pick)) out.push_back(pick);
            return;
        }
        for (int e = start; e <= m - remaining; ++e) {
            pick.push_back(e);
            self(self, e + 1, remaining - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, r);
    return out;
}

EdgeSet closure(const CircuitFamily& cf, const EdgeSet& x) {
    EdgeSet extra;
    for (const auto& c : cf.circuits) {
        auto outside = set_minus(c, x);
        if (outside.size() == 1) extra.push_back(outside[0]);
    }
    return set_union(x, edge_set(std::move(extra)));
}

std::vector<EdgeSet> remove_non_minimal(std::vector<EdgeSet> sets) {
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<EdgeSet> out;
    for (std::size_t a = 0; a < sets.size(); ++a) {
        bool keep = true;
        for (std::size_t b = 0; b < sets.size() && keep; ++b) {
            if (a != b && sets[b] != sets[a] && is_subset(sets[b], sets[a])) keep = false;
        }
        if (keep) out.push_back(sets[a]);
    }
    return out;
}

int rank_from_circuits(const CircuitFamily& cf, const EdgeSet& x) {
    auto ms = cf.masks();
    std::uint64_t indep = 0;
    int size = 0;
    for (int e : x) {
        std::uint64_t cand = indep | (std::uint64_t(1) << e);
        bool dependent = false;
        for (std::uint64_t cm : ms) {
            if ((cm & ~cand) == 0) {
                dependent = true;
                break;
            }
        }
        if (!dependent) {
            indep = cand;
            ++size;
        }
    }
    return size;
}

// --- cocircuits ---

namespace {

// Minimal hitting sets of the target edge sets, searched within their union.
std::vector<EdgeSet> minimal_hitting_sets(const std::vector<std::uint64_t>& targets) {
    std::vector<EdgeSet> out;
    if (targets.empty()) return out;
    std::uint64_t universe = 0;
    for (auto t : targets) universe |= t;
    auto candidates = edges_from_bits(universe);
    int m = static_cast<int>(candidates.size());
    std::vector<std::uint64_t> found_masks;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int start, int remaining, std::uint64_t mask) -> void {
        if (remaining == 0) {
            for (auto fm : found_masks) {
                if ((fm & ~mask) == 0) return;
            }
            for (auto t : targets) {
                if ((t & mask) == 0) return;
            }
            found_masks.push_back(mask);
            EdgeSet x;
            for (int idx : pick) x.push_back(candidates[idx]);
            out.push_back(std::move(x));
            return;
        }
        for (int i = start; i <= m - remaining; ++i) {
            pick.push_back(i);
            self(self, i + 1, remaining - 1, mask | (std::uint64_t(1) << candidates[i]));
            pick.pop_back();
        }
    };
    for (int size = 1; size <= m; ++size) rec(rec, 0, size, 0);
    return out;
}

} // namespace

std::vector<EdgeSet> cocircuits(const Tripartition& t) {
    require_proper(t);
    if (is_degenerate(t, CycleClass::Lift) || is_degenerate(t, CycleClass::Frame)) {
        throw Error(ErrorKind::DegenerateTripartition,
                    "cocircuit forms need both sides non-degenerate");
    }
    if (!is_connected(t.graph)) {
        throw Error(ErrorKind::DisconnectedGraph, "cocircuit forms need a connected graph");
    }
    const Multigraph& g = t.graph;
    int n = g.vertex_count;
    int m = g.edge_count();
    if (n > 18 || m > 64) {
        throw Error(ErrorKind::CapExceeded, "cocircuit enumeration capped at 18 vertices");
    }
    const auto& cat = t.cat;

    std::vector<std::uint64_t> unbal_masks, lift_masks, frame_masks;
    for (int i = 0; i < cat.size(); ++i) {
        if (t.cls[i] == CycleClass::Balanced) continue;
        unbal_masks.push_back(cat.edge_mask[i]);
        (t.cls[i] == CycleClass::Lift ? lift_masks : frame_masks).push_back(cat.edge_mask[i]);
    }

    std::vector<EdgeSet> out;
    // (1) minimal balancing sets of (G, B)
    for (auto& x : minimal_hitting_sets(unbal_masks)) out.push_back(std::move(x));

    // vertex-subset scan for the separator forms
    auto connected_on = [&](std::uint64_t vs) {
        if (vs == 0) return false;
        // BFS over vertices in vs using edges with both ends in vs
        int start = __builtin_ctzll(vs);
        std::uint64_t seen = std::uint64_t(1) << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e = 0; e < m; ++e) {
                auto [a, b] = g.edges[e];
                if (((vs >> a) & 1) == 0 || ((vs >> b) & 1) == 0) continue;
                int w = -1;
                if (a == v && !(seen >> b & 1)) w = b;
                else if (b == v && !(seen >> a & 1)) w = a;
                if (w >= 0) {
                    seen |= std::uint64_t(1) << w;
                    stack.push_back(w);
                }
            }
        }
        return seen == vs;
    };
    auto edges_within = [&](std::uint64_t vs) {
        std::uint64_t em = 0;
        for (int e = 0; e < m; ++e) {
            auto [a, b] = g.edges[e];
            if ((vs >> a & 1) && (vs >> b & 1)) em |= std::uint64_t(1) << e;
        }
        return em;
    };
    auto all_unbal_in = [&](std::uint64_t em, const std::vector<std::uint64_t>& side) {
        // every unbalanced cycle within em belongs to `side`
        for (auto um : unbal_masks) {
            if ((um & ~em) != 0) continue;
            bool in_side = false;
            for (auto sm : side) {
                if (sm == um) {
                    in_side = true;
                    break;
                }
            }
            if (!in_side) return false;
        }
        return true;
    };
    auto has_unbal = [&](std::uint64_t em) {
        for (auto um : unbal_masks) {
            if ((um & ~em) == 0) return true;
        }
        return false;
    };

    std::uint64_t all_v = (std::uint64_t(1) << n) - 1;
    std::uint64_t all_e = (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);
    for (std::uint64_t s = 1; s < all_v; ++s) {
        std::uint64_t comp_side = all_v & ~s;
        std::uint64_t es = edges_within(s);
        std::uint64_t ec = edges_within(comp_side);
        std::uint64_t cut = all_e & ~es & ~ec;
        if (cut == 0) continue;
        bool s_conn = connected_on(s);

        // bonds (forms 2 and 3): both sides connected
        if (s_conn && s < comp_side /* dedupe S <-> complement */ && connected_on(comp_side)) {
            bool s_bal = !has_unbal(es);
            bool c_bal = !has_unbal(ec);
            if (s_bal != c_bal) {
                out.push_back(edges_from_bits(cut)); // form (2)
            } else if (!s_bal && !c_bal && all_unbal_in(es | ec, lift_masks)) {
                out.push_back(edges_from_bits(cut)); // form (3)
            }
        }

        // form (4): X = G[S] connected, every component of the complement
        // unbalanced with all unbalanced cycles in F
        if (s_conn) {
            auto rest = edges_from_bits(ec);
            auto rest_comps = components(g, rest);
            // complement components include isolated vertices; an isolated
            // vertex is balanced, so reject unless every complement vertex
            // lies in an unbalanced edge component
            std::uint64_t covered = 0;
            bool ok = true;
            for (const auto& comp : rest_comps) {
                std::uint64_t cm = edge_bits(comp);
                if (!has_unbal(cm) || !all_unbal_in(cm, frame_masks)) {
                    ok = false;
                    break;
                }
                for (int v : incident_vertices(g, comp)) covered |= std::uint64_t(1) << v;
            }
            if (ok && covered == comp_side) {
                std::vector<std::uint64_t> inside_unbal;
                for (auto um : unbal_masks) {
                    if ((um & ~es) == 0) inside_unbal.push_back(um);
                }
                if (inside_unbal.empty()) {
                    out.push_back(edges_from_bits(cut));
                } else {
                    for (auto& b : minimal_hitting_sets(inside_unbal)) {
                        out.push_back(set_union(edges_from_bits(cut), b));
                    }
                }
            }
        }
    }

    // dedupe + minimality
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<std::uint64_t> ms;
    ms.reserve(out.size());
    for (const auto& x : out) ms.push_back(edge_bits(x));
    std::vector<EdgeSet> minimal;
    for (std::size_t a = 0; a < out.size(); ++a) {
        bool keep = true;
        for (std::size_t b = 0; b < out.size(); ++b) {
            if (a != b && (ms[b] & ~ms[a]) == 0 && ms[b] != ms[a]) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(out[a]);
    }
    return minimal;
}

FrameworkReport framework_check(const CircuitFamily& cf, const Multigraph& g) {
    FrameworkReport rep;
    auto fail = [&](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    if (cf.ground_size != g.edge_count()) {
        fail("ground set size differs from edge count");
        return rep;
    }

    // (2) per-component rank bound, isolated vertices trivially fine
    auto comps = components(g, full_edge_set(g));
    for (const auto& comp : comps) {
        int r = rank_from_circuits(cf, comp);
        int nv = static_cast<int>(incident_vertices(g, comp).size());
        if (r > nv) {
            fail("component rank " + std::to_string(r) + " exceeds vertex count " +
                 std::to_string(nv));
        }
    }

    // (3) cl(E(G-v)) within E(G-v) plus loops at v
    for (int v = 0; v < g.vertex_count; ++v) {
        EdgeSet avoid_v;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edges[e];
            if (a != v && b != v) avoid_v.push_back(e);
        }
        EdgeSet cl = closure(cf, avoid_v);
        for (int e : set_minus(cl, avoid_v)) {
            if (!(g.edges[e].first == v && g.edges[e].second == v)) {
                fail("closure condition fails at vertex " + std::to_string(v) + " with edge " +
                     std::to_string(e));
            }
        }
    }

    // (4) circuits induce at most two components
    for (const auto& c : cf.circuits) {
        if (component_count(g, c) > 2) {
            fail("circuit with more than two components");
            break;
        }
    }
    return rep;
}

} // namespace qgm
