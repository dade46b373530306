#include "qgm/cycles.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace qgm {

long cycle_limit_from_env() {
    if (const char* s = std::getenv("QUASIMATROID_CAP")) {
        char* end = nullptr;
        long v = std::strtol(s, &end, 10);
        if (end != s && v > 0) return v;
    }
    return kDefaultCycleLimit;
}

namespace {

// Cycles are enumerated anchored at their minimum edge index m0: the cycle
// minus that edge is a simple path between its endpoints in the graph
// restricted to edges of larger index. Enumerating all such paths from one
// fixed endpoint yields each cycle exactly once.
struct CycleSearch {
    const Multigraph& g;
    long limit;
    int max_length; // 0 = unbounded
    std::vector<std::vector<std::pair<int, int>>> adj; // vertex -> (edge, other end)
    std::vector<char> edge_allowed;
    std::vector<char> vertex_used;
    std::vector<char> seen_buf;
    std::vector<int> bfs_stack;
    std::vector<int> path_edges;
    int target = 0;
    std::vector<Cycle> out;

    CycleSearch(const Multigraph& graph, long lim, int max_len)
        : g(graph), limit(lim), max_length(max_len), adj(graph.vertex_count),
          edge_allowed(graph.edge_count(), 0), vertex_used(graph.vertex_count, 0),
          seen_buf(graph.vertex_count, 0) {}

    // Emits anchor + current path as one cycle; path_edges must already hold
    // the closing edge.
    void emit(int anchor_edge) {
        if (max_length > 0 && static_cast<int>(path_edges.size()) + 1 > max_length) return;
        Cycle c;
        c.reserve(path_edges.size() + 1);
        c.push_back(anchor_edge);
        c.insert(c.end(), path_edges.begin(), path_edges.end());
        std::sort(c.begin(), c.end());
        if (static_cast<long>(out.size()) >= limit) {
            throw Error(ErrorKind::CycleLimitExceeded,
                        "more than " + std::to_string(limit) + " cycles");
        }
        out.push_back(std::move(c));
    }

    // Can `target` still be reached from `from` through unused vertices and
    // allowed edges? Keeps the search output-sensitive.
    bool reachable(int from) {
        std::fill(seen_buf.begin(), seen_buf.end(), 0);
        bfs_stack.clear();
        bfs_stack.push_back(from);
        seen_buf[from] = 1;
        while (!bfs_stack.empty()) {
            int v = bfs_stack.back();
            bfs_stack.pop_back();
            for (auto [e, w] : adj[v]) {
                if (!edge_allowed[e]) continue;
                if (w == target) return true;
                if (seen_buf[w] || vertex_used[w]) continue;
                seen_buf[w] = 1;
                bfs_stack.push_back(w);
            }
        }
        return false;
    }

    void dfs(int v, int anchor_edge) {
        // cycles through here have >= |path| + 2 edges
        if (max_length > 0 && static_cast<int>(path_edges.size()) + 2 > max_length) return;
        for (auto [e, w] : adj[v]) {
            if (!edge_allowed[e]) continue;
            if (w == target) {
                path_edges.push_back(e);
                emit(anchor_edge);
                path_edges.pop_back();
                continue;
            }
            if (vertex_used[w]) continue;
            edge_allowed[e] = 0;
            vertex_used[w] = 1;
            path_edges.push_back(e);
            if (reachable(w)) dfs(w, anchor_edge);
            path_edges.pop_back();
            vertex_used[w] = 0;
            edge_allowed[e] = 1;
        }
    }

    void run() {
        for (int m0 = 0; m0 < g.edge_count(); ++m0) {
            auto [u, v] = g.edges[m0];
            if (u == v) {
                path_edges.clear();
                emit(m0); // a loop is a cycle of size 1
                continue;
            }
            if (max_length == 1) continue;
            for (int vv = 0; vv < g.vertex_count; ++vv) adj[vv].clear();
            std::fill(edge_allowed.begin(), edge_allowed.end(), 0);
            for (int e = m0 + 1; e < g.edge_count(); ++e) {
                auto [a, b] = g.edges[e];
                if (a == b) continue; // loops cannot extend a path
                adj[a].emplace_back(e, b);
                adj[b].emplace_back(e, a);
                edge_allowed[e] = 1;
            }
            std::fill(vertex_used.begin(), vertex_used.end(), 0);
            target = u;
            vertex_used[u] = 1;
            vertex_used[v] = 1;
            path_edges.clear();
            if (reachable(v)) dfs(v, m0);
        }
        std::sort(out.begin(), out.end());
    }
};

} // namespace

std::vector<Cycle> enumerate_cycles(const Multigraph& g, long limit, int max_length) {
    g.validate();
    if (limit <= 0) limit = cycle_limit_from_env();
    CycleSearch search(g, limit, max_length);
    search.run();
    return search.out;
}

std::uint64_t edge_bits(const EdgeSet& x) {
    std::uint64_t m = 0;
    for (int e : x) m |= std::uint64_t(1) << e;
    return m;
}

EdgeSet edges_from_bits(std::uint64_t bits) {
    EdgeSet x;
    while (bits) {
        int e = __builtin_ctzll(bits);
        x.push_back(e);
        bits &= bits - 1;
    }
    return x;
}

int CycleCatalog::find(const Cycle& c) const {
    auto it = std::lower_bound(cycles.begin(), cycles.end(), c);
    if (it == cycles.end() || *it != c) return -1;
    return static_cast<int>(it - cycles.begin());
}

CycleCatalog make_catalog(const Multigraph& g, std::vector<Cycle> cycles) {
    std::sort(cycles.begin(), cycles.end());
    cycles.erase(std::unique(cycles.begin(), cycles.end()), cycles.end());
    CycleCatalog cat;
    cat.cycles = std::move(cycles);
    cat.edge_masks_ok = g.edge_count() <= 64;
    cat.vertex_masks_ok = g.vertex_count <= 64;
    if (cat.edge_masks_ok) {
        cat.edge_mask.reserve(cat.cycles.size());
        for (const auto& c : cat.cycles) cat.edge_mask.push_back(edge_bits(c));
    }
    if (cat.vertex_masks_ok) {
        cat.vertex_mask.reserve(cat.cycles.size());
        for (const auto& c : cat.cycles) {
            std::uint64_t vm = 0;
            for (int v : incident_vertices(g, c)) vm |= std::uint64_t(1) << v;
            cat.vertex_mask.push_back(vm);
        }
    }
    return cat;
}

} // namespace qgm
