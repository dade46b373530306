#ifndef QGM_TEST_HELPERS_HPP
#define QGM_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qgm/matroid.hpp"

namespace qgm::testing {

// --- tiny graph fixtures ---

inline Multigraph triangle() {
    Multigraph g;
    g.vertex_count = 3;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    return g;
}

inline Multigraph path_graph(int n) {
    Multigraph g;
    g.vertex_count = n;
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

// vertices 0..5, triangles {0,1,2} and {3,4,5}, edges 0..2 and 3..5
inline Multigraph two_disjoint_triangles() {
    Multigraph g;
    g.vertex_count = 6;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    return g;
}

// triangles {0,1,2} and {2,3,4} sharing vertex 2
inline Multigraph bowtie() {
    Multigraph g;
    g.vertex_count = 5;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    g.add_edge(4, 2);
    return g;
}

// two vertices joined by three internally disjoint 2-edge paths
inline Multigraph theta_graph() {
    Multigraph g;
    g.vertex_count = 5; // 0 and 1 are the branch vertices
    g.add_edge(0, 2);
    g.add_edge(2, 1);
    g.add_edge(0, 3);
    g.add_edge(3, 1);
    g.add_edge(0, 4);
    g.add_edge(4, 1);
    return g;
}

// --- independent brute-force oracles (definition-level re-implementations) ---

// every subset of edges that induces a connected 2-regular subgraph
inline std::vector<EdgeSet> brute_force_cycles(const Multigraph& g) {
    int m = g.edge_count();
    std::vector<EdgeSet> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        std::vector<int> deg(g.vertex_count, 0);
        std::vector<int> parent(g.vertex_count);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        EdgeSet x;
        for (int e = 0; e < m; ++e) {
            if (!(mask >> e & 1)) continue;
            x.push_back(e);
            deg[g.edges[e].first] += 1;
            deg[g.edges[e].second] += 1;
            parent[find(g.edges[e].first)] = find(g.edges[e].second);
        }
        bool ok = true;
        int roots = 0;
        for (int v = 0; v < g.vertex_count && ok; ++v) {
            if (deg[v] == 0) continue;
            if (deg[v] != 2) ok = false;
            if (find(v) == v) ++roots;
        }
        if (ok && roots == 1) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// rank of every subset straight from the circuit list: largest subset
// containing no circuit
inline int brute_force_rank(const CircuitFamily& cf, std::uint64_t mask) {
    auto ms = cf.masks();
    auto independent = [&](std::uint64_t s) {
        for (auto cm : ms) {
            if ((cm & ~s) == 0) return false;
        }
        return true;
    };
    int best = 0;
    for (std::uint64_t s = mask;; s = (s - 1) & mask) {
        if (independent(s)) best = std::max(best, __builtin_popcountll(s));
        if (s == 0) break;
    }
    return best;
}

// --- seeded random instances ---

inline Multigraph random_multigraph(std::mt19937_64& rng, int max_vertices, int max_edges) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    Multigraph g;
    g.vertex_count = nv(rng);
    std::uniform_int_distribution<int> ne(1, max_edges);
    std::uniform_int_distribution<int> pv(0, g.vertex_count - 1);
    int m = ne(rng);
    for (int i = 0; i < m; ++i) {
        int u = pv(rng), v = pv(rng);
        g.add_edge(u, v); // loops and parallels welcome
    }
    return g;
}

// proper non-degenerate 8-edge instance: four digon classes arranged in a
// ring on vertices 0..3; the two digons on "opposite" vertex pairs form an
// L-pair, the other two an F-pair, every 4-cycle joins L
inline Tripartition quad_parallel_instance() {
    Multigraph g;
    g.vertex_count = 4;
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    g.add_edge(2, 3);
    g.add_edge(0, 2);
    g.add_edge(0, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 3);
    auto cycles = enumerate_cycles(g);
    std::vector<Cycle> lift_side, frame_side;
    for (const auto& c : cycles) {
        if (c == Cycle{0, 1} || c == Cycle{2, 3} || c.size() == 4) {
            lift_side.push_back(c);
        } else {
            frame_side.push_back(c);
        }
    }
    return make_tripartition(g, {}, lift_side, frame_side);
}

// rejection-samples class assignments until validate_proper passes
inline std::optional<Tripartition> random_proper_tripartition(const Multigraph& g,
                                                              std::mt19937_64& rng,
                                                              int attempts = 200) {
    auto cycles = enumerate_cycles(g);
    std::uniform_int_distribution<int> pick(0, 2);
    for (int a = 0; a < attempts; ++a) {
        Tripartition t;
        t.cat = make_catalog(g, cycles);
        t.graph = g;
        t.cls.clear();
        for (int i = 0; i < t.cat.size(); ++i) {
            int k = pick(rng);
            t.cls.push_back(k == 0 ? CycleClass::Balanced
                                   : (k == 1 ? CycleClass::Lift : CycleClass::Frame));
        }
        if (validate_proper(t).ok()) return t;
    }
    return std::nullopt;
}

} // namespace qgm::testing

#endif
