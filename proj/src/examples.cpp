#include "qgm/examples.hpp"

#include <algorithm>
#include <string>

#include "qgm/cycles.hpp"

namespace qgm {
namespace examples {

Multigraph complete_graph(int n) {
    Multigraph g;
    g.vertex_count = n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

Multigraph complete_bipartite(int a, int b) {
    Multigraph g;
    g.vertex_count = a + b;
    for (int u = 0; u < a; ++u) {
        for (int v = 0; v < b; ++v) {
            g.add_edge(u, a + v);
        }
    }
    return g;
}

Tripartition complete_empty_bias(int n, CycleClass side) {
    if (n < 3 || n > 8) {
        throw Error(ErrorKind::CapExceeded, "complete_empty_bias supports n in 3..8");
    }
    auto bg = make_biased_graph(complete_graph(n), {});
    return degenerate_tripartition(bg, side);
}

Tripartition four_cycle_parity(const Multigraph& g, const std::array<int, 4>& cycle_edges) {
    // the four edges must form a 4-cycle, listed in cyclic order
    for (int e : cycle_edges) {
        if (e < 0 || e >= g.edge_count() || g.is_loop(e)) {
            throw Error(ErrorKind::NotAFourCycle, "edge " + std::to_string(e) + " unusable");
        }
    }
    EdgeSet c4 = edge_set({cycle_edges.begin(), cycle_edges.end()});
    if (c4.size() != 4 || !is_cycle_subgraph(g, c4) ||
        incident_vertices(g, c4).size() != 4) {
        throw Error(ErrorKind::NotAFourCycle, "edges do not form a 4-cycle");
    }
    for (int k = 0; k < 4; ++k) {
        auto [a1, b1] = g.edges[cycle_edges[k]];
        auto [a2, b2] = g.edges[cycle_edges[(k + 1) % 4]];
        if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) {
            throw Error(ErrorKind::NotAFourCycle, "edges not in cyclic order");
        }
    }

    Tripartition t;
    t.cat = make_catalog(g, enumerate_cycles(g));
    t.graph = g;
    t.cls.reserve(t.cat.size());
    int e1 = cycle_edges[0], e3 = cycle_edges[2];
    for (const auto& cyc : t.cat.cycles) {
        EdgeSet meet = set_intersect(cyc, c4);
        if (meet.size() % 2 == 0) {
            t.cls.push_back(CycleClass::Balanced);
        } else if (meet.size() == 1) {
            // opposite edges e1/e3 send the cycle to L, e2/e4 to F
            t.cls.push_back((meet[0] == e1 || meet[0] == e3) ? CycleClass::Lift
                                                             : CycleClass::Frame);
        } else {
            t.cls.push_back(CycleClass::Frame); // exactly three edges
        }
    }
    return t;
}

Tripartition four_cycle_parity_complete(int n) {
    if (n < 4 || n > 8) {
        throw Error(ErrorKind::CapExceeded, "four_cycle_parity_complete supports n in 4..8");
    }
    // K_n with the 4-cycle 0-1-2-3 edges placed first so the parity cycle is
    // always edges {0,1,2,3} in cyclic order
    Multigraph g;
    g.vertex_count = n;
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool on_c4 = (u == 0 && v == 1) || (u == 1 && v == 2) || (u == 2 && v == 3) ||
                         (u == 0 && v == 3);
            if (!on_c4) g.add_edge(u, v);
        }
    }
    return four_cycle_parity(g, {0, 1, 2, 3});
}

Tripartition kab_plus_cycles(int a, int b, CycleClass side_for_pair) {
    if (a < 3 || b < 3 || a + b > 12) {
        throw Error(ErrorKind::CapExceeded, "kab_plus_cycles supports 3 <= a, b with a+b <= 12");
    }
    if (side_for_pair == CycleClass::Balanced) {
        throw Error(ErrorKind::InvalidInput, "pair side must be L or F");
    }
    Multigraph g = complete_bipartite(a, b);
    EdgeSet ring_a, ring_b;
    for (int i = 0; i < a; ++i) {
        ring_a.push_back(g.edge_count());
        g.add_edge(i, (i + 1) % a);
    }
    for (int i = 0; i < b; ++i) {
        ring_b.push_back(g.edge_count());
        g.add_edge(a + i, a + (i + 1) % b);
    }
    Tripartition t;
    t.cat = make_catalog(g, enumerate_cycles(g));
    t.graph = std::move(g);
    CycleClass other = side_for_pair == CycleClass::Lift ? CycleClass::Frame : CycleClass::Lift;
    t.cls.assign(t.cat.size(), other);
    int ia = t.cat.find(ring_a);
    int ib = t.cat.find(ring_b);
    if (ia < 0 || ib < 0) {
        throw Error(ErrorKind::InvalidInput, "added rings are not cycles");
    }
    t.cls[ia] = side_for_pair;
    t.cls[ib] = side_for_pair;
    return t;
}

TorusGrid torus_grid(int m, long cycle_limit, int max_cycle_length) {
    if (m < 2) {
        throw Error(ErrorKind::InvalidInput, "torus grid needs m >= 2");
    }
    int n = 2 * m;
    Multigraph g;
    g.vertex_count = n * n;
    auto vid = [&](int x, int y) { return ((x % n + n) % n) + n * ((y % n + n) % n); };
    // displacement carried by each edge, +1 in x or +1 in y from .first to .second
    std::vector<std::pair<int, int>> disp;
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            g.add_edge(vid(x, y), vid(x + 1, y));
            disp.emplace_back(1, 0);
            g.add_edge(vid(x, y), vid(x, y + 1));
            disp.emplace_back(0, 1);
        }
    }

    TorusGrid out;
    out.complete_cycles = max_cycle_length == 0;
    auto cycles = enumerate_cycles(g, cycle_limit, max_cycle_length);
    out.biased.cat = make_catalog(g, std::move(cycles));
    out.biased.graph = g;
    out.graph = std::move(g);

    // homology: walk each cycle once, summing signed displacements; total is
    // (n*a, n*b) for winding numbers (a, b)
    const auto& cat = out.biased.cat;
    out.homology.reserve(cat.size());
    out.biased.balanced.reserve(cat.size());
    for (const auto& cyc : cat.cycles) {
        int dx = 0, dy = 0;
        int start = out.graph.edges[cyc[0]].first;
        int at = start;
        int prev_edge = -1;
        do {
            int next_edge = -1;
            for (int e : cyc) {
                if (e == prev_edge) continue;
                auto [p, q] = out.graph.edges[e];
                if (p == at || q == at) {
                    next_edge = e;
                    break;
                }
            }
            auto [p, q] = out.graph.edges[next_edge];
            if (p == at) {
                dx += disp[next_edge].first;
                dy += disp[next_edge].second;
                at = q;
            } else {
                dx -= disp[next_edge].first;
                dy -= disp[next_edge].second;
                at = p;
            }
            prev_edge = next_edge;
        } while (at != start);
        int a = dx / n, b = dy / n;
        if (a < 0 || (a == 0 && b < 0)) {
            a = -a;
            b = -b;
        }
        out.homology.emplace_back(a, b);
        out.biased.balanced.push_back(a == 0 && b == 0 ? 1 : 0);
    }
    return out;
}

} // namespace examples
} // namespace qgm
