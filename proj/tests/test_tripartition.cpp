#include <doctest.h>

#include "helpers.hpp"
#include "qgm/examples.hpp"

using namespace qgm;
using namespace qgm::testing;

TEST_CASE("validation of propriety") {
    // everything balanced is proper
    auto g = two_disjoint_triangles();
    auto cycles = enumerate_cycles(g);
    auto all_b = make_tripartition(g, cycles, {}, {});
    CHECK(validate_proper(all_b).ok());

    // disjoint L and F triangles violate the meet condition
    auto bad = make_tripartition(g, {}, {cycles[0]}, {cycles[1]});
    auto res = validate_proper(bad);
    CHECK(res.kind == ProprietyViolation::Meet);
    CHECK(res.lift_cycle == cycles[0]);
    CHECK(res.frame_cycle == cycles[1]);
    CHECK_THROWS_AS(require_proper(bad), Error);

    // theta-property violation surfaces through validation too
    auto th = theta_graph();
    auto tc = enumerate_cycles(th);
    auto bad_theta = make_tripartition(th, {tc[0], tc[1]}, {}, {tc[2]});
    CHECK(validate_proper(bad_theta).kind == ProprietyViolation::Theta);

    // K_8 parity tripartition is proper
    CHECK(validate_proper(examples::four_cycle_parity_complete(8)).ok());
}

TEST_CASE("partition integrity is enforced") {
    auto g = triangle();
    auto cycles = enumerate_cycles(g);
    CHECK_THROWS_AS((void)make_tripartition(g, {}, {}, {}), Error);                 // uncovered
    CHECK_THROWS_AS((void)make_tripartition(g, cycles, cycles, {}), Error);         // double
    CHECK_THROWS_AS((void)make_tripartition(g, {{0}}, {}, cycles), Error);          // non-cycle
}

TEST_CASE("degeneracy") {
    auto g = two_disjoint_triangles();
    auto cycles = enumerate_cycles(g);
    auto t = make_tripartition(g, cycles, {}, {});
    CHECK(is_degenerate(t, CycleClass::Lift)); // empty side

    auto k6f = examples::complete_empty_bias(6, CycleClass::Frame);
    CHECK_FALSE(is_degenerate(k6f, CycleClass::Frame)); // disjoint triangles exist
    CHECK(is_degenerate(k6f, CycleClass::Lift));

    auto k8 = examples::four_cycle_parity_complete(8);
    CHECK_FALSE(is_degenerate(k8, CycleClass::Lift));
    CHECK_FALSE(is_degenerate(k8, CycleClass::Frame));
}

TEST_CASE("chi from tripartition") {
    auto k6f = examples::complete_empty_bias(6, CycleClass::Frame);
    auto chi_f = chi_from_tripartition(k6f);
    CHECK(std::none_of(chi_f.dependent.begin(), chi_f.dependent.end(),
                       [](char d) { return d != 0; }));

    auto k6l = examples::complete_empty_bias(6, CycleClass::Lift);
    auto chi_l = chi_from_tripartition(k6l);
    CHECK(std::all_of(chi_l.dependent.begin(), chi_l.dependent.end(),
                      [](char d) { return d != 0; }));

    // Example-3.3 instance: the ring pair independent, everything else dependent
    auto t33 = examples::kab_plus_cycles(3, 3, CycleClass::Frame);
    auto chi = chi_from_tripartition(t33);
    CHECK(is_proper(t33.biased(), chi).ok);
    int independent_count = 0;
    for (char d : chi.dependent) {
        if (!d) ++independent_count;
    }
    CHECK(independent_count == 1);
}

TEST_CASE("tripartition from chi") {
    auto k6 = make_biased_graph(examples::complete_graph(6), {});
    auto t_dep = tripartition_from_chi(k6, constant_chi(k6, true));
    // constant dependent: every unbalanced cycle lies in some bracelet in K_6
    for (int i = 0; i < t_dep.cat.size(); ++i) {
        bool in_bracelet = false;
        for (const auto& br : enumerate_bracelets(k6)) {
            if (br.a == i || br.b == i) in_bracelet = true;
        }
        if (in_bracelet) {
            CHECK(t_dep.cls[i] == CycleClass::Lift);
        } else {
            CHECK(t_dep.cls[i] == CycleClass::Frame); // bracelet-free cycles go to F
        }
    }
    auto t_ind = tripartition_from_chi(k6, constant_chi(k6, false));
    CHECK(t_ind.indices_of(CycleClass::Lift).empty());

    // disconnected graphs are rejected
    auto bg2 = make_biased_graph(two_disjoint_triangles(), {});
    CHECK_THROWS_AS((void)tripartition_from_chi(bg2, constant_chi(bg2, true)), Error);

    // improper chi is rejected: triangle with a loop at each vertex
    Multigraph g = triangle();
    g.add_edge(0, 0);
    g.add_edge(1, 1);
    g.add_edge(2, 2);
    auto loops = make_biased_graph(g, {});
    auto chi = constant_chi(loops, false);
    chi.dependent[0] = 1;
    REQUIRE_FALSE(is_proper(loops, chi).ok);
    try {
        (void)tripartition_from_chi(loops, chi);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ImproperChi);
    }
}

TEST_CASE("random proper tripartitions behave like matroids") {
    std::mt19937_64 rng(31337);
    int found = 0;
    while (found < 6) {
        auto g = random_multigraph(rng, 4, 7);
        if (enumerate_cycles(g).empty()) continue;
        auto t = random_proper_tripartition(g, rng);
        if (!t) continue;
        ++found;
        auto cf = circuits(*t);
        int m = g.edge_count();
        // rank formula against circuit rank on every subset
        RankOracle oracle{*t};
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
            EdgeSet x = edges_from_bits(mask);
            CHECK(oracle.rank(x) == rank_from_circuits(cf, x));
        }
    }
}

TEST_CASE("round trip chi -> tripartition -> chi") {
    auto instances = std::vector<Tripartition>{
        examples::complete_empty_bias(6, CycleClass::Frame),
        examples::complete_empty_bias(6, CycleClass::Lift),
        examples::kab_plus_cycles(3, 3, CycleClass::Frame),
        examples::kab_plus_cycles(3, 3, CycleClass::Lift),
        examples::four_cycle_parity_complete(6),
    };
    for (const auto& t : instances) {
        auto chi = chi_from_tripartition(t);
        auto t2 = tripartition_from_chi(t.biased(), chi);
        auto chi2 = chi_from_tripartition(t2);
        CHECK(chi.bracelets == chi2.bracelets);
        CHECK(chi.dependent == chi2.dependent);
    }
}
