#include <doctest.h>

#include "helpers.hpp"
#include "qgm/examples.hpp"
#include "qgm/io.hpp"

using namespace qgm;
using namespace qgm::testing;

TEST_CASE("graph JSON round trip") {
    Multigraph g = triangle();
    g.add_edge(0, 0); // loop
    g.add_edge(0, 1); // parallel
    auto j = io::graph_to_json(g);
    auto g2 = io::graph_from_json(j);
    CHECK(g2.vertex_count == g.vertex_count);
    CHECK(g2.edges == g.edges);

    CHECK_THROWS_AS((void)io::graph_from_json(nlohmann::json{{"vertices", 2}}), Error);
    CHECK_THROWS_AS(
        (void)io::graph_from_json(nlohmann::json::parse(R"({"vertices":1,"edges":[[0,5]]})")),
        Error);
}

TEST_CASE("bundle round trip with tripartition") {
    auto t = examples::kab_plus_cycles(3, 3, CycleClass::Frame);
    io::Bundle b;
    b.graph = t.graph;
    b.tri = t;
    auto j = io::bundle_to_json(b);
    auto b2 = io::bundle_from_json(j);
    REQUIRE(b2.tri.has_value());
    CHECK(b2.tri->cls == t.cls);
    CHECK(b2.tri->cat.cycles == t.cat.cycles);
}

TEST_CASE("rule-based tripartition sections") {
    auto k5 = examples::four_cycle_parity_complete(5);
    nlohmann::json j{{"graph", io::graph_to_json(k5.graph)},
                     {"tripartition",
                      {{"rule", "four_cycle_parity"}, {"params", {{"cycle", {0, 1, 2, 3}}}}}}};
    auto b = io::bundle_from_json(j);
    REQUIRE(b.tri.has_value());
    CHECK(b.tri->cls == k5.cls);

    nlohmann::json jd{{"graph", io::graph_to_json(examples::complete_graph(5))},
                      {"tripartition", {{"rule", "degenerate"}, {"params", {{"side", "F"}}}}}};
    auto bd = io::bundle_from_json(jd);
    REQUIRE(bd.tri.has_value());
    CHECK(bd.tri->indices_of(CycleClass::Lift).empty());
}

TEST_CASE("chi serialization") {
    auto t = examples::kab_plus_cycles(3, 3, CycleClass::Frame);
    auto bg = t.biased();
    auto chi = chi_from_tripartition(t);
    io::Bundle b;
    b.graph = t.graph;
    b.bias = bg;
    b.chi = chi;
    auto j = io::bundle_to_json(b);
    auto b2 = io::bundle_from_json(j);
    REQUIRE(b2.chi.has_value());
    CHECK(b2.chi->bracelets == chi.bracelets);
    CHECK(b2.chi->dependent == chi.dependent);

    // partial chi rejected
    j["chi"] = nlohmann::json::array();
    if (!chi.bracelets.empty()) {
        CHECK_THROWS_AS((void)io::bundle_from_json(j), Error);
    }
}

TEST_CASE("identical bundles serialize identically") {
    auto t = examples::four_cycle_parity_complete(6);
    io::Bundle b;
    b.graph = t.graph;
    b.tri = t;
    CHECK(io::bundle_to_json(b).dump() == io::bundle_to_json(b).dump());
}
