#include "qgm/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>

namespace qgm {
namespace io {

json graph_to_json(const Multigraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"vertices", g.vertex_count}, {"edges", edges}};
}

Multigraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw Error(ErrorKind::InvalidInput, "graph JSON needs vertices and edges");
    }
    Multigraph g;
    g.vertex_count = j.at("vertices").get<int>();
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw Error(ErrorKind::InvalidInput, "edge must be a [u, v] pair");
        }
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    g.validate();
    return g;
}

json edge_set_to_json(const EdgeSet& x) { return json(x); }

EdgeSet edge_set_from_json(const json& j) {
    if (!j.is_array()) throw Error(ErrorKind::InvalidInput, "edge set must be an array");
    return edge_set(j.get<std::vector<int>>());
}

namespace {

std::vector<Cycle> cycle_list_from_json(const json& j) {
    std::vector<Cycle> out;
    for (const auto& c : j) out.push_back(edge_set_from_json(c));
    return out;
}

json cycle_list_to_json(const std::vector<Cycle>& cycles) {
    json out = json::array();
    for (const auto& c : cycles) out.push_back(edge_set_to_json(c));
    return out;
}

CycleClass side_from_string(const std::string& s) {
    if (s == "L") return CycleClass::Lift;
    if (s == "F") return CycleClass::Frame;
    throw Error(ErrorKind::InvalidInput, "side must be \"L\" or \"F\"");
}

Tripartition tripartition_from_rule(const Multigraph& g, const json& j) {
    std::string rule = j.at("rule").get<std::string>();
    json params = j.value("params", json::object());
    if (rule == "four_cycle_parity") {
        auto arr = params.at("cycle").get<std::vector<int>>();
        if (arr.size() != 4) throw Error(ErrorKind::NotAFourCycle, "rule needs 4 edges");
        return examples::four_cycle_parity(g, {arr[0], arr[1], arr[2], arr[3]});
    }
    if (rule == "degenerate") {
        CycleClass side = side_from_string(params.at("side").get<std::string>());
        std::vector<Cycle> balanced;
        if (params.contains("balanced_cycles")) {
            balanced = cycle_list_from_json(params.at("balanced_cycles"));
        }
        return degenerate_tripartition(make_biased_graph(g, balanced), side);
    }
    if (rule == "graphic") {
        return make_tripartition(g, enumerate_cycles(g), {}, {});
    }
    if (rule == "pair_side") {
        CycleClass side = side_from_string(params.at("side").get<std::string>());
        CycleClass other = side == CycleClass::Lift ? CycleClass::Frame : CycleClass::Lift;
        Cycle ca = edge_set_from_json(params.at("cycle_a"));
        Cycle cb = edge_set_from_json(params.at("cycle_b"));
        Tripartition t;
        t.cat = make_catalog(g, enumerate_cycles(g));
        t.graph = g;
        t.cls.assign(t.cat.size(), other);
        int ia = t.cat.find(ca), ib = t.cat.find(cb);
        if (ia < 0 || ib < 0) throw Error(ErrorKind::InvalidInput, "pair_side cycle not found");
        t.cls[ia] = side;
        t.cls[ib] = side;
        return t;
    }
    throw Error(ErrorKind::InvalidInput, "unknown tripartition rule " + rule);
}

} // namespace

json tripartition_to_json(const Tripartition& t) {
    return json{{"B", cycle_list_to_json(t.cycles_of(CycleClass::Balanced))},
                {"L", cycle_list_to_json(t.cycles_of(CycleClass::Lift))},
                {"F", cycle_list_to_json(t.cycles_of(CycleClass::Frame))}};
}

json bias_to_json(const BiasedGraph& bg) {
    std::vector<Cycle> balanced;
    for (int i = 0; i < bg.cat.size(); ++i) {
        if (bg.balanced[i]) balanced.push_back(bg.cat.cycles[i]);
    }
    return json{{"balanced_cycles", cycle_list_to_json(balanced)}};
}

json chi_to_json(const BiasedGraph& bg, const BraceletFunction& chi) {
    json out = json::array();
    for (std::size_t k = 0; k < chi.bracelets.size(); ++k) {
        out.push_back(json{{"cycle_a", edge_set_to_json(bg.cat.cycles[chi.bracelets[k].a])},
                           {"cycle_b", edge_set_to_json(bg.cat.cycles[chi.bracelets[k].b])},
                           {"value", chi.dependent[k] ? "dependent" : "independent"}});
    }
    return out;
}

json bundle_to_json(const Bundle& b) {
    json out{{"graph", graph_to_json(b.graph)}};
    if (b.tri) out["tripartition"] = tripartition_to_json(*b.tri);
    if (b.bias) out["bias"] = bias_to_json(*b.bias);
    if (b.chi && b.bias) out["chi"] = chi_to_json(*b.bias, *b.chi);
    if (b.homology) {
        json h = json::array();
        for (auto [a, bb] : *b.homology) h.push_back(json::array({a, bb}));
        out["homology"] = h;
    }
    return out;
}

Bundle bundle_from_json(const json& j) {
    Bundle b;
    if (!j.is_object() || !j.contains("graph")) {
        throw Error(ErrorKind::InvalidInput, "bundle needs a graph section");
    }
    b.graph = graph_from_json(j.at("graph"));
    if (j.contains("tripartition")) {
        const json& tj = j.at("tripartition");
        if (tj.contains("rule")) {
            b.tri = tripartition_from_rule(b.graph, tj);
        } else {
            if (!tj.contains("B") || !tj.contains("L") || !tj.contains("F")) {
                throw Error(ErrorKind::InvalidInput, "tripartition JSON needs B, L, F");
            }
            b.tri = make_tripartition(b.graph, cycle_list_from_json(tj.at("B")),
                                      cycle_list_from_json(tj.at("L")),
                                      cycle_list_from_json(tj.at("F")));
        }
    }
    if (j.contains("bias")) {
        const json& bj = j.at("bias");
        if (bj.contains("rule")) {
            std::string rule = bj.at("rule").get<std::string>();
            if (rule == "empty") {
                b.bias = make_biased_graph(b.graph, {});
            } else if (rule == "all") {
                b.bias = make_biased_graph(b.graph, enumerate_cycles(b.graph));
            } else {
                throw Error(ErrorKind::InvalidInput, "unknown bias rule " + rule);
            }
        } else {
            b.bias = make_biased_graph(b.graph, cycle_list_from_json(bj.at("balanced_cycles")));
        }
    } else if (b.tri) {
        b.bias = b.tri->biased();
    }
    if (j.contains("chi")) {
        if (!b.bias) throw Error(ErrorKind::InvalidInput, "chi needs a bias section");
        BraceletFunction chi;
        chi.bracelets = enumerate_bracelets(*b.bias);
        chi.dependent.assign(chi.bracelets.size(), 0);
        std::vector<char> seen(chi.bracelets.size(), 0);
        for (const auto& entry : j.at("chi")) {
            Cycle ca = edge_set_from_json(entry.at("cycle_a"));
            Cycle cb = edge_set_from_json(entry.at("cycle_b"));
            int ia = b.bias->cat.find(ca), ib = b.bias->cat.find(cb);
            if (ia < 0 || ib < 0) {
                throw Error(ErrorKind::InvalidInput, "chi entry lists a non-cycle");
            }
            Bracelet br{std::min(ia, ib), std::max(ia, ib)};
            int k = chi.find(br);
            if (k < 0) throw Error(ErrorKind::InvalidInput, "chi entry is not a bracelet");
            std::string value = entry.at("value").get<std::string>();
            if (value != "dependent" && value != "independent") {
                throw Error(ErrorKind::InvalidInput, "chi value must be dependent|independent");
            }
            chi.dependent[k] = value == "dependent" ? 1 : 0;
            seen[k] = 1;
        }
        if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; })) {
            throw Error(ErrorKind::InvalidInput, "chi not total: some bracelet missing");
        }
        b.chi = std::move(chi);
    }
    if (j.contains("homology")) {
        std::vector<std::pair<int, int>> h;
        for (const auto& e : j.at("homology")) {
            h.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        b.homology = std::move(h);
    }
    return b;
}

Bundle load_bundle_file(const std::string& path) {
    json j;
    try {
        if (path == "-") {
            j = json::parse(std::cin);
        } else {
            std::ifstream in(path);
            if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
            j = json::parse(in);
        }
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
    }
    return bundle_from_json(j);
}

json circuits_to_json(const CircuitFamily& cf) {
    json arr = json::array();
    for (const auto& c : cf.circuits) arr.push_back(edge_set_to_json(c));
    return json{{"ground_size", cf.ground_size}, {"circuits", arr}};
}

} // namespace io
} // namespace qgm
