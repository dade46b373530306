#include "qgm/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "qgm/kernels.hpp"

namespace qgm {

using nlohmann::json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

json edge_set_json(const EdgeSet& x) { return json(x); }

} // namespace

json VerificationReport::to_json() const {
    return json{{"check", check},   {"instance", instance}, {"result", pass ? "pass" : "fail"},
                {"witness", witness}, {"seed", seed},        {"elapsed_ms", elapsed_ms}};
}

VerificationReport circuit_axioms(const CircuitFamily& cf, const std::string& instance) {
    Timer timer;
    VerificationReport rep;
    rep.check = "circuit_axioms";
    rep.instance = instance;
    if (cf.ground_size > 20) {
        throw Error(ErrorKind::CapExceeded, "circuit_axioms capped at 20 ground elements");
    }
    auto ms = cf.masks();

    for (std::size_t i = 0; i < cf.circuits.size() && rep.pass; ++i) {
        if (cf.circuits[i].empty()) {
            rep.pass = false;
            rep.witness = json{{"kind", "empty_member"}, {"index", i}};
        }
    }
    for (std::size_t i = 0; i < ms.size() && rep.pass; ++i) {
        for (std::size_t j = 0; j < ms.size() && rep.pass; ++j) {
            if (i != j && (ms[i] & ~ms[j]) == 0 && ms[i] != ms[j]) {
                rep.pass = false;
                rep.witness = json{{"kind", "comparable_pair"},
                                   {"inner", edge_set_json(cf.circuits[i])},
                                   {"outer", edge_set_json(cf.circuits[j])}};
            }
        }
    }
    if (rep.pass) {
        auto dep = kernels::dependence_table(ms, cf.ground_size);
        auto witness = kernels::elimination_scan(ms, dep);
        if (witness) {
            rep.pass = false;
            rep.witness = json{{"kind", "elimination_failure"},
                               {"circuit_x", edge_set_json(cf.circuits[witness->circuit_i])},
                               {"circuit_y", edge_set_json(cf.circuits[witness->circuit_j])},
                               {"element", witness->element}};
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

VerificationReport rank_axioms(const RankOracle& oracle, const EdgeSet& ground,
                               const std::string& instance) {
    Timer timer;
    VerificationReport rep;
    rep.check = "rank_axioms";
    rep.instance = instance;
    int n = static_cast<int>(ground.size());
    if (n > 14) {
        throw Error(ErrorKind::CapExceeded, "rank_axioms capped at 14 elements");
    }
    // rank over subsets of `ground`, indexed by local bitmask
    std::size_t size = std::size_t(1) << n;
    std::vector<int> rank(size);
    for (std::size_t m = 0; m < size; ++m) {
        EdgeSet x;
        for (int b = 0; b < n; ++b) {
            if (m >> b & 1) x.push_back(ground[b]);
        }
        rank[m] = oracle.rank(x);
    }
    auto fail = [&](const char* kind, std::size_t m, int e, int f) {
        rep.pass = false;
        rep.witness = json{{"kind", kind}, {"subset_mask", m}, {"e", e}, {"f", f}};
    };
    if (rank[0] != 0) fail("normalization", 0, -1, -1);
    for (std::size_t m = 0; m < size && rep.pass; ++m) {
        for (int e = 0; e < n && rep.pass; ++e) {
            if (m >> e & 1) continue;
            std::size_t me = m | (std::size_t(1) << e);
            if (rank[me] < rank[m] || rank[me] > rank[m] + 1) {
                fail("unit_increase", m, e, -1);
                break;
            }
            // local submodularity (diminishing returns) implies the general law
            for (int f = e + 1; f < n; ++f) {
                if (m >> f & 1) continue;
                std::size_t mf = m | (std::size_t(1) << f);
                std::size_t mef = me | (std::size_t(1) << f);
                if (rank[me] + rank[mf] < rank[mef] + rank[m]) {
                    fail("submodularity", m, e, f);
                    break;
                }
            }
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

std::vector<EdgeSet> cocircuits_bruteforce(const CircuitFamily& cf) {
    int n = cf.ground_size;
    if (n > 20) {
        throw Error(ErrorKind::CapExceeded, "cocircuits_bruteforce capped at 20 elements");
    }
    auto dep = kernels::dependence_table(cf.masks(), n);
    auto rank = kernels::rank_table_from_dependence(dep, n);
    std::uint64_t full = (std::uint64_t(1) << n) - 1;
    int r = rank[full];
    std::vector<EdgeSet> out;
    for (std::uint64_t h = 0; h <= full; ++h) {
        if (rank[h] != r - 1) continue;
        bool closed = true;
        for (int e = 0; e < n && closed; ++e) {
            if (h >> e & 1) continue;
            if (rank[h | (std::uint64_t(1) << e)] == rank[h]) closed = false;
        }
        if (closed) out.push_back(edges_from_bits(full & ~h));
    }
    std::sort(out.begin(), out.end());
    return out;
}

long ingleton_check(const RankOracle& oracle, const EdgeSet& a, const EdgeSet& b,
                    const EdgeSet& c, const EdgeSet& d) {
    auto r = [&](const EdgeSet& x) { return static_cast<long>(oracle.rank(x)); };
    auto u = [](const EdgeSet& x, const EdgeSet& y) { return set_union(x, y); };
    long lhs = r(u(a, b)) + r(u(a, c)) + r(u(a, d)) + r(u(b, c)) + r(u(b, d));
    long rhs = r(a) + r(b) + r(u(u(a, b), c)) + r(u(u(a, b), d)) + r(u(c, d));
    return lhs - rhs;
}

std::optional<IngletonWitness> ingleton_search(const Tripartition& t, long eval_cap) {
    RankOracle oracle{t};
    auto lifts = t.indices_of(CycleClass::Lift);
    auto frames = t.indices_of(CycleClass::Frame);
    const auto& cat = t.cat;
    auto disjoint = [&](int i, int j) {
        if (cat.vertex_masks_ok) return (cat.vertex_mask[i] & cat.vertex_mask[j]) == 0;
        auto vi = incident_vertices(t.graph, cat.cycles[i]);
        auto vj = incident_vertices(t.graph, cat.cycles[j]);
        std::vector<int> tmp;
        std::set_intersection(vi.begin(), vi.end(), vj.begin(), vj.end(),
                              std::back_inserter(tmp));
        return tmp.empty();
    };
    std::vector<std::pair<int, int>> lift_pairs, frame_pairs;
    for (std::size_t p = 0; p < lifts.size(); ++p)
        for (std::size_t q = p + 1; q < lifts.size(); ++q)
            if (disjoint(lifts[p], lifts[q])) lift_pairs.emplace_back(lifts[p], lifts[q]);
    for (std::size_t p = 0; p < frames.size(); ++p)
        for (std::size_t q = p + 1; q < frames.size(); ++q)
            if (disjoint(frames[p], frames[q])) frame_pairs.emplace_back(frames[p], frames[q]);

    long evals = 0;
    for (auto [ai, bi] : lift_pairs) {
        for (auto [ci, di] : frame_pairs) {
            if (++evals > eval_cap) return std::nullopt;
            IngletonWitness w;
            w.sets = {cat.cycles[ai], cat.cycles[bi], cat.cycles[ci], cat.cycles[di]};
            w.value = ingleton_check(oracle, w.sets[0], w.sets[1], w.sets[2], w.sets[3]);
            if (w.value < 0) return w;
        }
    }
    return std::nullopt;
}

IngletonScanReport ingleton_exhaustive(const RankOracle& oracle, long quad_cap,
                                       std::uint64_t seed) {
    int n = oracle.ground_size();
    if (n > 14) {
        throw Error(ErrorKind::CapExceeded, "ingleton_exhaustive capped at 14 elements");
    }
    auto rank = kernels::rank_table_from_oracle(oracle, n);
    auto scan = kernels::ingleton_scan(rank, n, quad_cap, seed);
    IngletonScanReport rep;
    rep.min_value = scan.min_value;
    rep.exhaustive = scan.exhaustive;
    rep.seed = scan.seed;
    for (int k = 0; k < 4; ++k) rep.argmin[k] = edges_from_bits(scan.argmin[k]);
    return rep;
}

const char* to_string(FrameLiftClass c) {
    switch (c) {
        case FrameLiftClass::Frame: return "frame";
        case FrameLiftClass::Lift: return "lift";
        case FrameLiftClass::Both: return "both";
        case FrameLiftClass::Neither: return "neither";
    }
    return "?";
}

FrameLiftClass classify_frame_lift(const Tripartition& t) {
    auto cf = circuits(t);
    auto bg = t.biased();
    bool eq_frame = cf.circuits == frame_circuits(bg).circuits;
    bool eq_lift = cf.circuits == lift_circuits(bg).circuits;
    if (eq_frame && eq_lift) return FrameLiftClass::Both;
    if (eq_frame) return FrameLiftClass::Frame;
    if (eq_lift) return FrameLiftClass::Lift;
    return FrameLiftClass::Neither;
}

bool matroid_connected(const CircuitFamily& cf) {
    int n = cf.ground_size;
    if (n <= 1) return true;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& c : cf.circuits) {
        for (std::size_t k = 1; k < c.size(); ++k) parent[find(c[k])] = find(c[0]);
    }
    int r = find(0);
    for (int e = 1; e < n; ++e) {
        if (find(e) != r) return false;
    }
    return true;
}

VerificationReport connectivity_checks(const Tripartition& t, const std::string& instance) {
    Timer timer;
    VerificationReport rep;
    rep.check = "connectivity_checks";
    rep.instance = instance;
    auto cf = circuits(t);
    if (matroid_connected(cf)) {
        bool f_deg = is_degenerate(t, CycleClass::Frame);
        bool l_deg = is_degenerate(t, CycleClass::Lift);
        if (!f_deg && !is_connected(t.graph)) {
            rep.pass = false;
            rep.witness = json{{"kind", "disconnected_graph_with_nondegenerate_F"}};
        } else if (!f_deg && !l_deg && !is_2_connected(t.graph)) {
            rep.pass = false;
            rep.witness = json{{"kind", "not_2connected_with_both_sides_nondegenerate"},
                               {"cut_vertices", cut_vertices(t.graph)}};
        }
    }
    rep.elapsed_ms = timer.ms();
    return rep;
}

std::vector<EdgeSet> lemma_shape_violations(const Multigraph& g, const CircuitFamily& cf) {
    // balance is defined by cf: a cycle of g is balanced iff it is a circuit
    auto all_cycles = enumerate_cycles(g);
    auto balanced_cycle = [&](const EdgeSet& c) { return cf.has(c); };
    auto unbalanced_cycle_set = [&](const EdgeSet& c) {
        return is_cycle_subgraph(g, c) && !cf.has(c);
    };
    std::vector<EdgeSet> bad;
    for (const auto& x : cf.circuits) {
        auto shape = classify_subgraph(g, x);
        bool ok = false;
        switch (shape.tag) {
            case ShapeTag::SingleCycle:
                ok = balanced_cycle(x);
                break;
            case ShapeTag::Theta: {
                // all three cycles unbalanced: no balanced cycle inside x
                ok = true;
                for (const auto& c : all_cycles) {
                    if (is_subset(c, x) && balanced_cycle(c)) {
                        ok = false;
                        break;
                    }
                }
                break;
            }
            case ShapeTag::TightHandcuff:
            case ShapeTag::Bracelet:
                ok = unbalanced_cycle_set(shape.cycle_a) && unbalanced_cycle_set(shape.cycle_b);
                break;
            case ShapeTag::LooseHandcuff:
                ok = unbalanced_cycle_set(shape.cycle_a) && unbalanced_cycle_set(shape.cycle_b);
                break;
            case ShapeTag::Forest:
            case ShapeTag::Other:
                ok = false;
                break;
        }
        if (!ok) bad.push_back(x);
    }
    return bad;
}

} // namespace qgm
