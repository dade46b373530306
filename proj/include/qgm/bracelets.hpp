#ifndef QGM_BRACELETS_HPP
#define QGM_BRACELETS_HPP

#include <utility>
#include <vector>

#include "qgm/bias.hpp"

namespace qgm {

/// Unordered pair of vertex-disjoint unbalanced cycles, stored as indices
/// into the ambient BiasedGraph's catalog with a < b.
struct Bracelet {
    int a = -1;
    int b = -1;

    friend bool operator==(const Bracelet&, const Bracelet&) = default;
    friend auto operator<=>(const Bracelet&, const Bracelet&) = default;
};

/// All bracelets in canonical (a, b) order.
std::vector<Bracelet> enumerate_bracelets(const BiasedGraph& bg);

/// beta of the union of the two bracelets' cycles; adjacency in the bracelet
/// graph means this equals 3.
int bracelet_union_beta(const BiasedGraph& bg, const Bracelet& x, const Bracelet& y);

struct BraceletGraph {
    std::vector<Bracelet> nodes;
    std::vector<std::pair<int, int>> adjacency; // i < j, lexicographic order
    std::vector<int> component;                 // node -> component id (0-based, by first node)
    int component_count = 0;
};

BraceletGraph bracelet_graph(const BiasedGraph& bg);
BraceletGraph bracelet_graph_serial(const BiasedGraph& bg); // reference implementation

/// Component labels only, skipping beta tests for pairs already known to be
/// connected. Used where the full adjacency list is not needed (torus grids).
std::pair<std::vector<int>, int> bracelet_components(const BiasedGraph& bg,
                                                     const std::vector<Bracelet>& nodes);

/// Total map bracelet -> dependent/independent, aligned with
/// enumerate_bracelets order.
struct BraceletFunction {
    std::vector<Bracelet> bracelets;
    std::vector<char> dependent;

    int find(const Bracelet& br) const;
    bool is_dependent(int idx) const { return dependent[idx] != 0; }
};

BraceletFunction constant_chi(const BiasedGraph& bg, bool dependent);

struct ProprietyResult {
    bool ok = true;
    Bracelet b1, b2; // witness: same component, different values
};

/// ok iff chi is constant on every component of the bracelet graph.
/// Throws InvalidInput when chi is not total on the bracelets of bg.
ProprietyResult is_proper(const BiasedGraph& bg, const BraceletFunction& chi);

} // namespace qgm

#endif
