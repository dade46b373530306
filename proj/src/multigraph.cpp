#include "qgm/multigraph.hpp"

#include <algorithm>
#include <numeric>

namespace qgm {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::CycleLimitExceeded: return "CycleLimitExceeded";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::SearchCapExceeded: return "SearchCapExceeded";
        case ErrorKind::GraphBalanced: return "GraphBalanced";
        case ErrorKind::ImproperTripartition: return "ImproperTripartition";
        case ErrorKind::ImproperChi: return "ImproperChi";
        case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
        case ErrorKind::DegenerateTripartition: return "DegenerateTripartition";
        case ErrorKind::GroundSetTooLarge: return "GroundSetTooLarge";
        case ErrorKind::LoopContraction: return "LoopContraction";
        case ErrorKind::BasepointNotLink: return "BasepointNotLink";
        case ErrorKind::BasepointNotUnbalancedLoop: return "BasepointNotUnbalancedLoop";
        case ErrorKind::EdgeSetCollision: return "EdgeSetCollision";
        case ErrorKind::NotAFourCycle: return "NotAFourCycle";
    }
    return "UnknownError";
}

const char* to_string(ShapeTag tag) {
    switch (tag) {
        case ShapeTag::Forest: return "Forest";
        case ShapeTag::SingleCycle: return "SingleCycle";
        case ShapeTag::Theta: return "Theta";
        case ShapeTag::TightHandcuff: return "TightHandcuff";
        case ShapeTag::LooseHandcuff: return "LooseHandcuff";
        case ShapeTag::Bracelet: return "Bracelet";
        case ShapeTag::Other: return "Other";
    }
    return "?";
}

void Multigraph::validate() const {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
            throw Error(ErrorKind::InvalidInput, "edge endpoint out of range");
        }
    }
}

EdgeSet edge_set(std::vector<int> indices) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    return indices;
}

bool contains(const EdgeSet& x, int e) {
    return std::binary_search(x.begin(), x.end(), e);
}

bool is_subset(const EdgeSet& a, const EdgeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeSet set_intersect(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
    EdgeSet out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

bool intersects(const EdgeSet& a, const EdgeSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

EdgeSet full_edge_set(const Multigraph& g) {
    EdgeSet all(g.edges.size());
    std::iota(all.begin(), all.end(), 0);
    return all;
}

void validate_edge_set(const Multigraph& g, const EdgeSet& x) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < 0 || x[i] >= g.edge_count()) {
            throw Error(ErrorKind::InvalidInput, "edge index out of range");
        }
        if (i > 0 && x[i - 1] >= x[i]) {
            throw Error(ErrorKind::InvalidInput, "edge set not sorted/unique");
        }
    }
}

std::vector<int> incident_vertices(const Multigraph& g, const EdgeSet& x) {
    std::vector<int> vs;
    vs.reserve(2 * x.size());
    for (int e : x) {
        vs.push_back(g.edges[e].first);
        vs.push_back(g.edges[e].second);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

std::vector<int> subgraph_degrees(const Multigraph& g, const EdgeSet& x) {
    std::vector<int> deg(g.vertex_count, 0);
    for (int e : x) {
        deg[g.edges[e].first] += 1;
        deg[g.edges[e].second] += 1;
    }
    return deg;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void merge(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

std::vector<EdgeSet> components(const Multigraph& g, const EdgeSet& x) {
    Dsu dsu(g.vertex_count);
    for (int e : x) dsu.merge(g.edges[e].first, g.edges[e].second);

    std::vector<EdgeSet> out;
    std::vector<int> root_slot(g.vertex_count, -1);
    for (int e : x) {
        int r = dsu.find(g.edges[e].first);
        if (root_slot[r] < 0) {
            root_slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[root_slot[r]].push_back(e);
    }
    // edges were visited in increasing order, so each component is sorted and
    // components are ordered by smallest edge index already
    return out;
}

int component_count(const Multigraph& g, const EdgeSet& x) {
    Dsu dsu(g.vertex_count);
    for (int e : x) dsu.merge(g.edges[e].first, g.edges[e].second);
    std::vector<char> seen(g.vertex_count, 0);
    int c = 0;
    for (int e : x) {
        int r = dsu.find(g.edges[e].first);
        if (!seen[r]) {
            seen[r] = 1;
            ++c;
        }
    }
    return c;
}

int cyclomatic_number(const Multigraph& g, const EdgeSet& x) {
    return static_cast<int>(x.size()) - static_cast<int>(incident_vertices(g, x).size()) +
           component_count(g, x);
}

bool is_connected_subgraph(const Multigraph& g, const EdgeSet& x) {
    return component_count(g, x) <= 1;
}

bool is_cycle_subgraph(const Multigraph& g, const EdgeSet& x) {
    if (x.empty()) return false;
    if (component_count(g, x) != 1) return false;
    auto deg = subgraph_degrees(g, x);
    for (int v : incident_vertices(g, x)) {
        if (deg[v] != 2) return false;
    }
    return true;
}

EdgeSet bridges(const Multigraph& g, const EdgeSet& x) {
    // An edge of G[x] is a bridge iff removing it splits its component.
    // Desk scale: test each non-loop edge directly.
    EdgeSet out;
    for (int e : x) {
        if (g.is_loop(e)) continue;
        EdgeSet rest;
        rest.reserve(x.size() - 1);
        for (int f : x) {
            if (f != e) rest.push_back(f);
        }
        // Removing e may also drop vertices from V(X); compare via vertex DSU
        // over the original vertex set of X.
        Dsu dsu(g.vertex_count);
        for (int f : rest) dsu.merge(g.edges[f].first, g.edges[f].second);
        if (dsu.find(g.edges[e].first) != dsu.find(g.edges[e].second)) {
            out.push_back(e);
        }
    }
    return out;
}

SubgraphShape classify_subgraph(const Multigraph& g, const EdgeSet& x) {
    validate_edge_set(g, x);
    SubgraphShape shape;
    int beta = cyclomatic_number(g, x);
    if (beta == 0) {
        shape.tag = ShapeTag::Forest;
        return shape;
    }
    auto comps = components(g, x);
    if (beta == 1 && comps.size() == 1 && is_cycle_subgraph(g, x)) {
        shape.tag = ShapeTag::SingleCycle;
        return shape;
    }
    if (beta != 2) {
        shape.tag = ShapeTag::Other;
        return shape;
    }
    if (comps.size() == 2) {
        if (is_cycle_subgraph(g, comps[0]) && is_cycle_subgraph(g, comps[1])) {
            shape.tag = ShapeTag::Bracelet;
            shape.cycle_a = comps[0];
            shape.cycle_b = comps[1];
        } else {
            shape.tag = ShapeTag::Other;
        }
        return shape;
    }
    if (comps.size() != 1) {
        shape.tag = ShapeTag::Other;
        return shape;
    }

    // Connected with beta == 2: theta, tight handcuff, loose handcuff or Other,
    // decided by the degree multiset and bridge presence.
    auto deg = subgraph_degrees(g, x);
    int deg3 = 0, deg4 = 0, other = 0;
    for (int v : incident_vertices(g, x)) {
        if (deg[v] == 2) continue;
        if (deg[v] == 3) ++deg3;
        else if (deg[v] == 4) ++deg4;
        else ++other;
    }
    auto br = bridges(g, x);
    if (other == 0 && deg4 == 1 && deg3 == 0 && br.empty()) {
        // Two edge-disjoint cycles meeting in exactly the degree-4 vertex.
        // Peel one cycle off by walking from the shared vertex.
        int shared = -1;
        for (int v : incident_vertices(g, x)) {
            if (deg[v] == 4) shared = v;
        }
        // Walk: start along one edge at `shared`, follow degree-2 vertices
        // until returning to `shared`.
        EdgeSet first_cycle;
        {
            int start_edge = -1;
            for (int e : x) {
                if (g.edges[e].first == shared || g.edges[e].second == shared) {
                    start_edge = e;
                    break;
                }
            }
            int cur_edge = start_edge;
            int cur_v = shared;
            do {
                first_cycle.push_back(cur_edge);
                auto [a, b] = g.edges[cur_edge];
                int nxt = (a == cur_v) ? b : a;
                if (nxt == shared) break;
                int next_edge = -1;
                for (int e : x) {
                    if (e == cur_edge) continue;
                    if (g.edges[e].first == nxt || g.edges[e].second == nxt) {
                        next_edge = e;
                        break;
                    }
                }
                cur_edge = next_edge;
                cur_v = nxt;
            } while (true);
        }
        std::sort(first_cycle.begin(), first_cycle.end());
        shape.cycle_a = first_cycle;
        shape.cycle_b = set_minus(x, first_cycle);
        if (is_cycle_subgraph(g, shape.cycle_a) && is_cycle_subgraph(g, shape.cycle_b)) {
            shape.tag = ShapeTag::TightHandcuff;
        } else {
            shape.tag = ShapeTag::Other;
        }
        return shape;
    }
    if (other == 0 && deg4 == 0 && deg3 == 2) {
        if (br.empty()) {
            shape.tag = ShapeTag::Theta;
            return shape;
        }
        // Bridges gone, two cycles must remain.
        EdgeSet rest = set_minus(x, br);
        auto cyc = components(g, rest);
        if (cyc.size() == 2 && is_cycle_subgraph(g, cyc[0]) && is_cycle_subgraph(g, cyc[1])) {
            shape.tag = ShapeTag::LooseHandcuff;
            shape.cycle_a = cyc[0];
            shape.cycle_b = cyc[1];
            shape.path = br;
            return shape;
        }
    }
    shape.tag = ShapeTag::Other;
    return shape;
}

bool is_connected(const Multigraph& g) {
    if (g.vertex_count <= 1) return true;
    Dsu dsu(g.vertex_count);
    for (auto [u, v] : g.edges) dsu.merge(u, v);
    int r = dsu.find(0);
    for (int v = 1; v < g.vertex_count; ++v) {
        if (dsu.find(v) != r) return false;
    }
    return true;
}

namespace {

// Components of G - S over the remaining vertices (isolated ones count).
int components_after_removal(const Multigraph& g, const std::vector<char>& removed) {
    Dsu dsu(g.vertex_count);
    for (auto [u, v] : g.edges) {
        if (!removed[u] && !removed[v]) dsu.merge(u, v);
    }
    std::vector<char> seen(g.vertex_count, 0);
    int c = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (removed[v]) continue;
        int r = dsu.find(v);
        if (!seen[r]) {
            seen[r] = 1;
            ++c;
        }
    }
    return c;
}

} // namespace

std::vector<int> cut_vertices(const Multigraph& g) {
    std::vector<int> out;
    std::vector<char> removed(g.vertex_count, 0);
    int base = components_after_removal(g, removed);
    for (int v = 0; v < g.vertex_count; ++v) {
        removed[v] = 1;
        int c = components_after_removal(g, removed);
        removed[v] = 0;
        // removing v loses one vertex; its old component splits iff c > base - 1 + 1
        if (c > base) out.push_back(v);
    }
    return out;
}

bool is_k_connected(const Multigraph& g, int k) {
    if (g.vertex_count <= k) return false;
    if (!is_connected(g)) return false;
    if (k <= 1) return true;
    // Remove every vertex subset of size < k and test connectivity of the rest.
    std::vector<char> removed(g.vertex_count, 0);
    auto rec = [&](auto&& self, int start, int remaining) -> bool {
        if (remaining == 0) return true;
        for (int v = start; v < g.vertex_count; ++v) {
            removed[v] = 1;
            bool ok = components_after_removal(g, removed) <= 1 && self(self, v + 1, remaining - 1);
            removed[v] = 0;
            if (!ok) return false;
        }
        return true;
    };
    for (int size = 1; size < k; ++size) {
        if (!rec(rec, 0, size)) return false;
    }
    return true;
}

bool is_2_connected(const Multigraph& g) { return is_k_connected(g, 2); }
bool is_4_connected(const Multigraph& g) { return is_k_connected(g, 4); }

} // namespace qgm
