// Acceptance suite: one check per numbered criterion, each printed as a
// single pass/fail line. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "qgm/constructions.hpp"
#include "qgm/examples.hpp"
#include "qgm/io.hpp"
#include "qgm/kernels.hpp"
#include "qgm/verify.hpp"

using namespace qgm;
using qgm::testing::quad_parallel_instance;

namespace {

int failures = 0;

struct Criterion {
    int number;
    std::string name;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }

    ~Criterion() {
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok) {
            std::printf("criterion %2d: PASS  (%.2fs) %s\n", number, s, name.c_str());
        } else {
            std::printf("criterion %2d: FAIL  (%.2fs) %s -- %s\n", number, s, name.c_str(),
                        detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
};

// the named instance list: generated examples plus seeded random proper
// tripartitions on small multigraphs
std::vector<std::pair<std::string, Tripartition>> criterion_instances() {
    std::vector<std::pair<std::string, Tripartition>> out;
    out.emplace_back("K5_frame", examples::complete_empty_bias(5, CycleClass::Frame));
    out.emplace_back("K5_lift", examples::complete_empty_bias(5, CycleClass::Lift));
    out.emplace_back("K6_frame", examples::complete_empty_bias(6, CycleClass::Frame));
    out.emplace_back("K6_lift", examples::complete_empty_bias(6, CycleClass::Lift));
    out.emplace_back("K5_parity", examples::four_cycle_parity_complete(5));
    out.emplace_back("kab33_frame", examples::kab_plus_cycles(3, 3, CycleClass::Frame));
    out.emplace_back("kab33_lift", examples::kab_plus_cycles(3, 3, CycleClass::Lift));

    std::mt19937_64 rng(20250809);
    int made = 0;
    while (made < 8) {
        std::uniform_int_distribution<int> nv(2, 5);
        std::uniform_int_distribution<int> ne(2, 8);
        Multigraph g;
        g.vertex_count = nv(rng);
        int m = ne(rng);
        std::uniform_int_distribution<int> pv(0, g.vertex_count - 1);
        for (int i = 0; i < m; ++i) g.add_edge(pv(rng), pv(rng));
        auto cycles = enumerate_cycles(g);
        if (cycles.empty()) continue;
        // rejection-sample class assignments
        std::uniform_int_distribution<int> pick(0, 2);
        for (int attempt = 0; attempt < 60; ++attempt) {
            Tripartition t;
            t.cat = make_catalog(g, cycles);
            t.graph = g;
            for (int i = 0; i < t.cat.size(); ++i) {
                int k = pick(rng);
                t.cls.push_back(k == 0 ? CycleClass::Balanced
                                       : (k == 1 ? CycleClass::Lift : CycleClass::Frame));
            }
            if (validate_proper(t).ok()) {
                out.emplace_back("random" + std::to_string(made), std::move(t));
                ++made;
                break;
            }
            t.cls.clear();
        }
    }
    return out;
}

} // namespace

static void criterion_1(const std::vector<std::pair<std::string, Tripartition>>& instances) {
    Criterion c{1, "circuit axioms hold on every generated instance"};
    for (const auto& [name, t] : instances) {
        auto rep = circuit_axioms(circuits(t), name);
        c.expect(rep.pass, name + ": " + rep.witness.dump());
    }
}

static void criterion_2() {
    Criterion c{2, "non-constant chi on (K_6, empty) breaks elimination, constant passes"};
    auto bg = make_biased_graph(examples::complete_graph(6), {});
    auto base = constant_chi(bg, false);
    c.expect(base.bracelets.size() == 10, "expected 10 bracelets");
    for (std::size_t k = 0; k < base.bracelets.size(); ++k) {
        auto chi = base;
        chi.dependent[k] = 1;
        auto rep = circuit_axioms(circuits_chi(bg, chi, false), "flip" + std::to_string(k));
        // This expectation cannot hold: K_6's bracelet graph has no edges
        // (complementary triangle splits never share a triangle), so every
        // flip is a proper bracelet function and its family is a matroid.
        // See the K_7 / loop-triangle checks in the unit suite for the
        // statement this criterion was after.
        c.expect(!rep.pass,
                 "flip " + std::to_string(k) +
                     " passed the axioms: it is proper (the K_6 bracelet graph is edgeless) "
                     "and yields a quasi-graphic matroid");
        if (!rep.pass) {
            c.expect(rep.witness.at("kind") == "elimination_failure",
                     "expected elimination witness, got " + rep.witness.dump());
        }
    }
    c.expect(circuit_axioms(circuits_chi(bg, constant_chi(bg, false))).pass,
             "constant independent chi failed");
    c.expect(circuit_axioms(circuits_chi(bg, constant_chi(bg, true))).pass,
             "constant dependent chi failed");
}

static void criterion_3(const std::vector<std::pair<std::string, Tripartition>>& instances) {
    Criterion c{3, "closed-form rank equals circuit rank on all subsets (|E| <= 12)"};
    for (const auto& [name, t] : instances) {
        int m = t.graph.edge_count();
        if (m > 12) continue;
        auto cf = circuits(t);
        RankOracle oracle{t};
        auto formula = kernels::rank_table_from_oracle(oracle, m);
        auto brute =
            kernels::rank_table_from_dependence(kernels::dependence_table(cf.masks(), m), m);
        c.expect(formula == brute, name + ": rank tables differ");
    }
}

static void criterion_4(const std::vector<std::pair<std::string, Tripartition>>& instances) {
    Criterion c{4, "independence characterization and basis counts match brute force"};
    for (const auto& [name, t] : instances) {
        int m = t.graph.edge_count();
        if (m > 12) continue;
        auto cf = circuits(t);
        auto ms = cf.masks();
        long maximal = 0;
        int rank_full = rank_from_circuits(cf, full_edge_set(t.graph));
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
            bool circuit_free = true;
            for (auto cm : ms) {
                if ((cm & ~mask) == 0) {
                    circuit_free = false;
                    break;
                }
            }
            bool indep = is_independent(t, edges_from_bits(mask));
            if (indep != circuit_free) {
                c.expect(false, name + ": mismatch at mask " + std::to_string(mask));
                return;
            }
            if (indep && __builtin_popcountll(mask) == rank_full) ++maximal;
        }
        auto b = bases(t);
        c.expect(static_cast<long>(b.size()) == maximal,
                 name + ": basis count " + std::to_string(b.size()) + " vs " +
                     std::to_string(maximal));
    }
}

static void criterion_5() {
    Criterion c{5, "cocircuit forms equal hyperplane complements; stars present"};
    // non-degenerate |E| <= 12 instances: the quad-parallel ring and a
    // pendant-edge variant exercising the balanced-bond form
    auto base = quad_parallel_instance();
    c.expect(!is_degenerate(base, CycleClass::Lift) && !is_degenerate(base, CycleClass::Frame),
             "base instance unexpectedly degenerate");
    {
        auto fast = cocircuits(base);
        auto slow = cocircuits_bruteforce(circuits(base));
        c.expect(fast == slow, "quad_parallel: cocircuits differ from brute force");
        if (matroid_connected(circuits(base)) && is_2_connected(base.graph)) {
            for (int v = 0; v < base.graph.vertex_count; ++v) {
                EdgeSet star;
                for (int e = 0; e < base.graph.edge_count(); ++e) {
                    auto [a, b] = base.graph.edges[e];
                    if ((a == v) != (b == v)) star.push_back(e);
                }
                c.expect(std::binary_search(fast.begin(), fast.end(), star),
                         "missing star at vertex " + std::to_string(v));
            }
        } else {
            c.expect(false, "expected a connected matroid on a 2-connected graph");
        }
    }
    {
        Multigraph g = base.graph;
        g.vertex_count += 1;
        g.add_edge(0, g.vertex_count - 1);
        auto t = make_tripartition(g, base.cycles_of(CycleClass::Balanced),
                                   base.cycles_of(CycleClass::Lift),
                                   base.cycles_of(CycleClass::Frame));
        auto fast = cocircuits(t);
        auto slow = cocircuits_bruteforce(circuits(t));
        c.expect(fast == slow, "pendant variant: cocircuits differ from brute force");
    }
}

static void criterion_6() {
    Criterion c{6, "Ingleton: -1 witness on K_8 parity; graphic K_4 scan non-negative"};
    auto t = examples::four_cycle_parity_complete(8);
    auto witness = ingleton_search(t);
    c.expect(witness.has_value(), "no Ingleton violation found");
    if (witness) {
        c.expect(witness->value == -1,
                 "violation value " + std::to_string(witness->value) + " != -1");
    }

    auto k4 = examples::complete_graph(4);
    auto graphic = make_tripartition(k4, enumerate_cycles(k4), {}, {});
    RankOracle oracle{graphic};
    auto scan = ingleton_exhaustive(oracle);
    c.expect(scan.exhaustive, "K_4 scan was not exhaustive");
    c.expect(scan.min_value >= 0,
             "graphic matroid produced negative slack " + std::to_string(scan.min_value));
}

static void criterion_7(const std::vector<std::pair<std::string, Tripartition>>& instances) {
    Criterion c{7, "graph-level minors equal circuit-level minors on every edge"};
    for (const auto& [name, t] : instances) {
        auto cf = circuits(t);
        for (int e = 0; e < t.graph.edge_count(); ++e) {
            auto del = delete_edge(t, e);
            c.expect(circuits(del.part).circuits == minor_circuits(cf, {e}, {}).circuits,
                     name + ": delete " + std::to_string(e));
            if (!t.graph.is_loop(e)) {
                auto con = contract_edge(t, e);
                c.expect(circuits(con.part).circuits == minor_circuits(cf, {}, {e}).circuits,
                         name + ": contract " + std::to_string(e));
            }
        }
    }
}

static void criterion_8() {
    Criterion c{8, "degenerate sides equal frame/lift; K_8 parity is neither"};
    auto k6f = examples::complete_empty_bias(6, CycleClass::Frame);
    auto k6l = examples::complete_empty_bias(6, CycleClass::Lift);
    c.expect(circuits(k6f).circuits == frame_circuits(k6f.biased()).circuits,
             "K6 all-F != frame circuits");
    c.expect(circuits(k6l).circuits == lift_circuits(k6l.biased()).circuits,
             "K6 all-L != lift circuits");
    c.expect(classify_frame_lift(k6f) == FrameLiftClass::Frame, "K6 all-F not classified frame");
    c.expect(classify_frame_lift(k6l) == FrameLiftClass::Lift, "K6 all-L not classified lift");

    for (auto side : {CycleClass::Frame, CycleClass::Lift}) {
        auto t = examples::kab_plus_cycles(3, 3, side);
        auto bg = t.biased();
        auto all_f = degenerate_tripartition(bg, CycleClass::Frame);
        auto all_l = degenerate_tripartition(bg, CycleClass::Lift);
        c.expect(circuits(all_f).circuits == frame_circuits(bg).circuits,
                 "kab33 all-F != frame circuits");
        c.expect(circuits(all_l).circuits == lift_circuits(bg).circuits,
                 "kab33 all-L != lift circuits");
    }

    auto k8 = examples::four_cycle_parity_complete(8);
    c.expect(classify_frame_lift(k8) == FrameLiftClass::Neither,
             "K_8 parity not classified neither");
}

static void criterion_9(const std::vector<std::pair<std::string, Tripartition>>& instances) {
    Criterion c{9, "framework axioms hold; mixed loop sum breaks the circuit shapes"};
    for (const auto& [name, t] : instances) {
        auto rep = framework_check(circuits(t), t.graph);
        c.expect(rep.ok, name + ": " + (rep.violations.empty() ? "" : rep.violations.front()));
    }
    // frame-not-lift with lift-not-frame via K_4 plus an unbalanced loop
    Multigraph g = examples::complete_graph(4);
    g.add_edge(0, 0);
    auto bg = make_biased_graph(g, {});
    auto mixed = loop_sum(bg, 6, constant_chi(bg, false), bg, 6, constant_chi(bg, true));
    auto bad = lemma_shape_violations(mixed.graph, mixed.circuits);
    c.expect(!bad.empty(), "every 2-sum circuit matched a quasi-graphic shape");
}

static void criterion_10() {
    Criterion c{10, "4x4 torus bracelet graph: >= 4 components, classes pair up"};
    auto tg = examples::torus_grid(2);
    c.expect(tg.complete_cycles, "enumeration was capped");
    auto bracelets = enumerate_bracelets(tg.biased);
    c.expect(!bracelets.empty(), "no bracelets found");
    for (const auto& br : bracelets) {
        if (tg.homology[br.a] != tg.homology[br.b]) {
            c.expect(false, "bracelet pairs distinct homology classes");
            break;
        }
    }
    auto [comp, count] = bracelet_components(tg.biased, bracelets);
    (void)comp;
    c.expect(count >= 4, "component count " + std::to_string(count) + " < 4");
}

int main(int argc, char** argv) {
    // optional single-criterion selection: qgm_acceptance 7
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    auto want = [&](int n) { return only == 0 || only == n; };

    std::vector<std::pair<std::string, Tripartition>> instances;
    if (want(1) || want(3) || want(4) || want(7) || want(9)) {
        instances = criterion_instances();
    }
    if (want(1)) criterion_1(instances);
    if (want(2)) criterion_2();
    if (want(3)) criterion_3(instances);
    if (want(4)) criterion_4(instances);
    if (want(5)) criterion_5();
    if (want(6)) criterion_6();
    if (want(7)) criterion_7(instances);
    if (want(8)) criterion_8();
    if (want(9)) criterion_9(instances);
    if (want(10)) criterion_10();
    if (only == 0) {
        if (failures == 0) {
            std::printf("all acceptance criteria passed\n");
        } else {
            std::printf("%d criterion(s) failed\n", failures);
        }
    }
    return failures;
}
