#include "qgm/bracelets.hpp"

#include <algorithm>
#include <numeric>

#include "qgm/kernels.hpp"

namespace qgm {

std::vector<Bracelet> enumerate_bracelets(const BiasedGraph& bg) {
    auto unbal = bg.unbalanced_indices();
    std::vector<Bracelet> out;
    const auto& cat = bg.cat;
    // a cycle can only join a bracelet if the smallest unbalanced cycle still
    // fits next to it
    if (!unbal.empty()) {
        auto vcount = [&](int i) {
            return cat.vertex_masks_ok
                       ? __builtin_popcountll(cat.vertex_mask[i])
                       : static_cast<int>(incident_vertices(bg.graph, cat.cycles[i]).size());
        };
        int min_vc = bg.graph.vertex_count;
        for (int i : unbal) min_vc = std::min(min_vc, vcount(i));
        std::vector<int> filtered;
        for (int i : unbal) {
            if (vcount(i) + min_vc <= bg.graph.vertex_count) filtered.push_back(i);
        }
        unbal = std::move(filtered);
    }
    for (std::size_t p = 0; p < unbal.size(); ++p) {
        for (std::size_t q = p + 1; q < unbal.size(); ++q) {
            int i = unbal[p], j = unbal[q];
            bool disjoint;
            if (cat.vertex_masks_ok) {
                disjoint = (cat.vertex_mask[i] & cat.vertex_mask[j]) == 0;
            } else {
                auto vi = incident_vertices(bg.graph, cat.cycles[i]);
                auto vj = incident_vertices(bg.graph, cat.cycles[j]);
                std::vector<int> tmp;
                std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                                      std::back_inserter(tmp));
                disjoint = tmp.empty();
            }
            if (disjoint) out.push_back({i, j});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int bracelet_union_beta(const BiasedGraph& bg, const Bracelet& x, const Bracelet& y) {
    // Distinct cycle indices among the (up to) four cycles.
    std::array<int, 4> ids{x.a, x.b, y.a, y.b};
    std::sort(ids.begin(), ids.end());
    int n = static_cast<int>(std::unique(ids.begin(), ids.end()) - ids.begin());

    const auto& cat = bg.cat;
    if (cat.edge_masks_ok && cat.vertex_masks_ok) {
        std::uint64_t em = 0, vm = 0;
        for (int k = 0; k < n; ++k) {
            em |= cat.edge_mask[ids[k]];
            vm |= cat.vertex_mask[ids[k]];
        }
        // components of the union: cycles merged transitively by vertex sharing
        std::array<int, 4> comp{0, 1, 2, 3};
        auto find = [&](int a) {
            while (comp[a] != a) a = comp[a] = comp[comp[a]];
            return a;
        };
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (cat.vertex_mask[ids[p]] & cat.vertex_mask[ids[q]]) {
                    comp[find(p)] = find(q);
                }
            }
        }
        int c = 0;
        for (int k = 0; k < n; ++k) {
            if (find(k) == k) ++c;
        }
        return __builtin_popcountll(em) - __builtin_popcountll(vm) + c;
    }
    EdgeSet u;
    for (int k = 0; k < n; ++k) u = set_union(u, cat.cycles[ids[k]]);
    return cyclomatic_number(bg.graph, u);
}

namespace {

BraceletGraph build_graph(const BiasedGraph& bg, bool parallel) {
    BraceletGraph g;
    g.nodes = enumerate_bracelets(bg);
    g.adjacency = parallel ? kernels::bracelet_adjacency(bg, g.nodes)
                           : kernels::bracelet_adjacency_serial(bg, g.nodes);

    int n = static_cast<int>(g.nodes.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (auto [i, j] : g.adjacency) parent[find(i)] = find(j);

    g.component.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (g.component[r] < 0) g.component[r] = g.component_count++;
        g.component[i] = g.component[r];
    }
    return g;
}

} // namespace

BraceletGraph bracelet_graph(const BiasedGraph& bg) { return build_graph(bg, true); }
BraceletGraph bracelet_graph_serial(const BiasedGraph& bg) { return build_graph(bg, false); }

std::pair<std::vector<int>, int> bracelet_components(const BiasedGraph& bg,
                                                     const std::vector<Bracelet>& nodes) {
    int n = static_cast<int>(nodes.size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (find(i) == find(j)) continue; // beta test unnecessary
            if (bracelet_union_beta(bg, nodes[i], nodes[j]) == 3) {
                parent[find(i)] = find(j);
            }
        }
    }
    std::vector<int> comp(n, -1);
    int count = 0;
    for (int i = 0; i < n; ++i) {
        int r = find(i);
        if (comp[r] < 0) comp[r] = count++;
        comp[i] = comp[r];
    }
    return {comp, count};
}

int BraceletFunction::find(const Bracelet& br) const {
    auto it = std::lower_bound(bracelets.begin(), bracelets.end(), br);
    if (it == bracelets.end() || !(*it == br)) return -1;
    return static_cast<int>(it - bracelets.begin());
}

BraceletFunction constant_chi(const BiasedGraph& bg, bool dependent) {
    BraceletFunction chi;
    chi.bracelets = enumerate_bracelets(bg);
    chi.dependent.assign(chi.bracelets.size(), dependent ? 1 : 0);
    return chi;
}

ProprietyResult is_proper(const BiasedGraph& bg, const BraceletFunction& chi) {
    auto nodes = enumerate_bracelets(bg);
    if (nodes != chi.bracelets) {
        throw Error(ErrorKind::InvalidInput, "bracelet function not total on this biased graph");
    }
    ProprietyResult res;
    if (nodes.empty()) return res;
    auto [comp, count] = bracelet_components(bg, nodes);
    // first bracelet seen per component fixes the expected value
    std::vector<int> rep(count, -1);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        int c = comp[i];
        if (rep[c] < 0) {
            rep[c] = static_cast<int>(i);
        } else if (chi.dependent[i] != chi.dependent[rep[c]]) {
            res.ok = false;
            res.b1 = nodes[rep[c]];
            res.b2 = nodes[i];
            return res;
        }
    }
    return res;
}

} // namespace qgm
