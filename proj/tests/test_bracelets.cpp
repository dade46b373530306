#include <doctest.h>

#include "helpers.hpp"
#include "qgm/examples.hpp"
#include "qgm/kernels.hpp"

using namespace qgm;
using namespace qgm::testing;

TEST_CASE("bracelet counts on complete graphs") {
    auto k5 = make_biased_graph(examples::complete_graph(5), {});
    CHECK(enumerate_bracelets(k5).empty()); // two disjoint cycles need 6 vertices

    auto k6 = make_biased_graph(examples::complete_graph(6), {});
    auto brs = enumerate_bracelets(k6);
    CHECK(brs.size() == 10); // disjoint triangle pairs, C(6,3)/2
    CHECK(std::is_sorted(brs.begin(), brs.end()));

    auto balanced = make_biased_graph(examples::complete_graph(6),
                                      enumerate_cycles(examples::complete_graph(6)));
    CHECK(enumerate_bracelets(balanced).empty());
}

TEST_CASE("bracelet graphs of complete graphs with empty bias") {
    // K_6 is the degenerate boundary: its bracelets are the complementary
    // triangle splits, no two share a triangle, so the graph has no edges
    auto k6 = make_biased_graph(examples::complete_graph(6), {});
    auto bg6 = bracelet_graph(k6);
    CHECK(bg6.nodes.size() == 10);
    CHECK(bg6.adjacency.empty());
    CHECK(bg6.component_count == 10);

    // from n = 7 on the bracelet graph is connected
    auto k7 = make_biased_graph(examples::complete_graph(7), {});
    auto bg7 = bracelet_graph(k7);
    CHECK(bg7.nodes.size() == 175);
    CHECK(bg7.component_count == 1);

    // adjacency invariants: i < j by construction, adjacent bracelets share a
    // cycle that is a component of their union
    CHECK(!bg7.adjacency.empty());
    for (auto [i, j] : bg7.adjacency) {
        CHECK(i < j);
        const auto& a = bg7.nodes[i];
        const auto& b = bg7.nodes[j];
        bool share = a.a == b.a || a.a == b.b || a.b == b.a || a.b == b.b;
        CHECK(share);
        CHECK(bracelet_union_beta(k7, a, b) == 3);
    }
}

TEST_CASE("bracelet adjacency kernel: serial equals parallel") {
    auto k6 = make_biased_graph(examples::complete_graph(6), {});
    auto nodes = enumerate_bracelets(k6);
    CHECK(kernels::bracelet_adjacency_serial(k6, nodes) ==
          kernels::bracelet_adjacency_parallel(k6, nodes));

    auto k7 = make_biased_graph(examples::complete_graph(7), {});
    auto nodes7 = enumerate_bracelets(k7);
    CHECK(kernels::bracelet_adjacency_serial(k7, nodes7) ==
          kernels::bracelet_adjacency_parallel(k7, nodes7));
}

TEST_CASE("isolated bracelet in the K_{3,3}-plus-cycles graph") {
    auto t = examples::kab_plus_cycles(3, 3, CycleClass::Frame);
    auto bg = t.biased(); // empty bias
    auto graph = bracelet_graph(bg);
    // locate the bracelet of the two added rings
    EdgeSet ring_a, ring_b;
    for (int e = 9; e < 12; ++e) ring_a.push_back(e);
    for (int e = 12; e < 15; ++e) ring_b.push_back(e);
    int ia = bg.cat.find(ring_a);
    int ib = bg.cat.find(ring_b);
    REQUIRE(ia >= 0);
    REQUIRE(ib >= 0);
    int node = -1;
    for (std::size_t k = 0; k < graph.nodes.size(); ++k) {
        if (graph.nodes[k] == Bracelet{std::min(ia, ib), std::max(ia, ib)}) {
            node = static_cast<int>(k);
        }
    }
    REQUIRE(node >= 0);
    for (auto [i, j] : graph.adjacency) {
        CHECK(i != node);
        CHECK(j != node);
    }
    CHECK(graph.component_count >= 2);
}

TEST_CASE("empty bracelet graph when at most one unbalanced cycle") {
    auto bg = make_biased_graph(triangle(), {});
    CHECK(bracelet_graph(bg).nodes.empty());
}

TEST_CASE("propriety of bracelet functions") {
    auto k6 = make_biased_graph(examples::complete_graph(6), {});
    CHECK(is_proper(k6, constant_chi(k6, true)).ok);
    CHECK(is_proper(k6, constant_chi(k6, false)).ok);

    // K_6's bracelet graph has no edges, so every function is proper
    auto chi6 = constant_chi(k6, false);
    for (std::size_t k = 0; k < chi6.bracelets.size(); ++k) {
        auto flipped = chi6;
        flipped.dependent[k] = 1;
        CHECK(is_proper(k6, flipped).ok);
    }

    // K_7's bracelet graph is connected: any flip is improper, with a witness
    // pair inside one component carrying different values
    auto k7 = make_biased_graph(examples::complete_graph(7), {});
    auto chi7 = constant_chi(k7, false);
    for (std::size_t k = 0; k < chi7.bracelets.size(); k += 17) {
        auto flipped = chi7;
        flipped.dependent[k] = 1;
        auto res = is_proper(k7, flipped);
        REQUIRE_FALSE(res.ok);
        int i1 = flipped.find(res.b1);
        int i2 = flipped.find(res.b2);
        REQUIRE(i1 >= 0);
        REQUIRE(i2 >= 0);
        CHECK(flipped.dependent[i1] != flipped.dependent[i2]);
    }

    // Example-3.3 style: independent on the isolated bracelet, dependent elsewhere
    auto t = examples::kab_plus_cycles(3, 3, CycleClass::Frame);
    auto chi33 = chi_from_tripartition(t);
    CHECK(is_proper(t.biased(), chi33).ok);
    bool has_dependent = false, has_independent = false;
    for (char d : chi33.dependent) (d ? has_dependent : has_independent) = true;
    CHECK(has_dependent);
    CHECK(has_independent);

    // totality enforced
    BraceletFunction partial;
    CHECK_THROWS_AS((void)is_proper(k6, partial), Error);
}

TEST_CASE("proper chi is constant on bracelets containing a fixed cycle") {
    // restatement of the shared-cycle lemma at checkable scale
    auto check_instance = [](const BiasedGraph& bg, const BraceletFunction& chi) {
        REQUIRE(is_proper(bg, chi).ok);
        for (int c = 0; c < bg.cat.size(); ++c) {
            int seen = -1;
            for (std::size_t k = 0; k < chi.bracelets.size(); ++k) {
                if (chi.bracelets[k].a != c && chi.bracelets[k].b != c) continue;
                if (seen < 0) seen = chi.dependent[k];
                CHECK(static_cast<int>(chi.dependent[k]) == seen);
            }
        }
    };
    auto k6 = make_biased_graph(examples::complete_graph(6), {});
    check_instance(k6, constant_chi(k6, true));
    auto t33 = examples::kab_plus_cycles(3, 3, CycleClass::Lift);
    check_instance(t33.biased(), chi_from_tripartition(t33));
    auto k8 = examples::four_cycle_parity_complete(8);
    check_instance(k8.biased(), chi_from_tripartition(k8));
}
