#ifndef QGM_MULTIGRAPH_HPP
#define QGM_MULTIGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qgm/error.hpp"

namespace qgm {

/// Undirected multigraph. Loops (u == v) and parallel edges are allowed.
/// Edge identity is the index into `edges`; no operation reorders the list.
struct Multigraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool is_loop(int e) const { return edges[e].first == edges[e].second; }

    void add_edge(int u, int v) { edges.emplace_back(u, v); }

    // Throws InvalidInput if an endpoint id is out of range.
    void validate() const;
};

/// Sorted, duplicate-free list of edge indices into an ambient Multigraph.
using EdgeSet = std::vector<int>;

/// A cycle is an EdgeSet whose induced subgraph is connected and 2-regular.
/// A loop is a cycle of size 1, a digon a cycle of size 2.
using Cycle = EdgeSet;

// --- EdgeSet utilities (inputs assumed sorted unique, outputs sorted unique) ---

EdgeSet edge_set(std::vector<int> indices); // sorts + dedupes
bool contains(const EdgeSet& x, int e);
bool is_subset(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_minus(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersect(const EdgeSet& a, const EdgeSet& b);
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);
bool intersects(const EdgeSet& a, const EdgeSet& b);
EdgeSet full_edge_set(const Multigraph& g);

void validate_edge_set(const Multigraph& g, const EdgeSet& x);

/// Vertices incident to at least one edge of x, sorted. Isolated vertices of
/// the ambient graph never appear.
std::vector<int> incident_vertices(const Multigraph& g, const EdgeSet& x);

/// Degree of each vertex in G[x]; a loop contributes 2 to its vertex.
std::vector<int> subgraph_degrees(const Multigraph& g, const EdgeSet& x);

/// Connected components of G[x] as edge sets, ordered by smallest edge index.
std::vector<EdgeSet> components(const Multigraph& g, const EdgeSet& x);

int component_count(const Multigraph& g, const EdgeSet& x);

/// beta(X) = |X| - |V(X)| + c(X): minimum edge removals making G[X] acyclic.
int cyclomatic_number(const Multigraph& g, const EdgeSet& x);

bool is_connected_subgraph(const Multigraph& g, const EdgeSet& x);

/// True iff G[x] is connected and every incident vertex has degree exactly 2.
bool is_cycle_subgraph(const Multigraph& g, const EdgeSet& x);

/// Edges of G[x] lying on no cycle of G[x].
EdgeSet bridges(const Multigraph& g, const EdgeSet& x);

enum class ShapeTag {
    Forest,
    SingleCycle,
    Theta,
    TightHandcuff,
    LooseHandcuff,
    Bracelet,
    Other,
};

const char* to_string(ShapeTag tag);

struct SubgraphShape {
    ShapeTag tag = ShapeTag::Other;
    // Populated for TightHandcuff, LooseHandcuff and Bracelet.
    Cycle cycle_a;
    Cycle cycle_b;
    // Populated for LooseHandcuff: the connecting path's edges.
    EdgeSet path;
};

/// Exact structural classification of G[x] per the handcuff/bracelet shapes.
SubgraphShape classify_subgraph(const Multigraph& g, const EdgeSet& x);

// --- Connectivity (brute force; graphs here stay at desk scale) ---

std::vector<int> cut_vertices(const Multigraph& g);
bool is_connected(const Multigraph& g);
bool is_k_connected(const Multigraph& g, int k);
bool is_2_connected(const Multigraph& g);
bool is_4_connected(const Multigraph& g);

} // namespace qgm

#endif
