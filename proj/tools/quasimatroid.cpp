// Command-line front end: generate example instances, validate inputs, query
// matroids, run verification batteries. Exit codes: 0 success/pass, 1 a
// verification check failed (witness printed), 2 input error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgm/constructions.hpp"
#include "qgm/examples.hpp"
#include "qgm/io.hpp"
#include "qgm/kernels.hpp"
#include "qgm/verify.hpp"

using namespace qgm;
using nlohmann::json;

namespace {

bool pretty_output = false;

void emit(const json& j) {
    if (pretty_output) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << j.dump() << "\n";
    }
}

EdgeSet parse_edge_list(const std::string& csv) {
    EdgeSet out;
    std::string cur;
    for (char ch : csv) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return edge_set(out);
}

CycleClass parse_side(const std::string& s) {
    if (s == "L" || s == "l") return CycleClass::Lift;
    if (s == "F" || s == "f") return CycleClass::Frame;
    throw Error(ErrorKind::InvalidInput, "side must be L or F");
}

Tripartition require_tripartition(const io::Bundle& b) {
    if (!b.tri) {
        throw Error(ErrorKind::InvalidInput, "input bundle has no tripartition section");
    }
    return *b.tri;
}

int run_verify_suite(const io::Bundle& bundle, const std::string& suite, std::uint64_t seed) {
    bool any_fail = false;
    auto report = [&](VerificationReport rep) {
        rep.seed = seed;
        emit(rep.to_json());
        if (!rep.pass) any_fail = true;
    };
    auto quick = [&](const std::string& check, bool pass, json witness = nullptr) {
        VerificationReport rep;
        rep.check = check;
        rep.pass = pass;
        rep.witness = std::move(witness);
        report(std::move(rep));
    };

    if (bundle.tri) {
        const Tripartition& t = *bundle.tri;
        auto validation = validate_proper(t);
        quick("validate_proper", validation.ok());
        if (!validation.ok()) return 1;

        auto cf = circuits(t);
        report(circuit_axioms(cf));
        quick("framework_check", framework_check(cf, t.graph).ok);
        report(connectivity_checks(t));

        int m = t.graph.edge_count();
        RankOracle oracle{t};
        if (m <= (suite == "full" ? 14 : 10)) {
            report(rank_axioms(oracle, full_edge_set(t.graph)));
        }
        if (m <= 12 && suite == "full") {
            auto formula = kernels::rank_table_from_oracle(oracle, m);
            auto brute =
                kernels::rank_table_from_dependence(kernels::dependence_table(cf.masks(), m), m);
            quick("rank_formula_vs_circuits", formula == brute);
            bool nondeg = !is_degenerate(t, CycleClass::Lift) &&
                          !is_degenerate(t, CycleClass::Frame) && is_connected(t.graph);
            if (nondeg) {
                quick("cocircuits_vs_bruteforce", cocircuits(t) == cocircuits_bruteforce(cf));
            }
        }
        auto ingleton = ingleton_search(t);
        json wit = nullptr;
        if (ingleton) {
            wit = json{{"value", ingleton->value},
                       {"sets",
                        {ingleton->sets[0], ingleton->sets[1], ingleton->sets[2],
                         ingleton->sets[3]}}};
        }
        quick("ingleton_search", !ingleton || ingleton->value < 0, wit);
    } else if (bundle.bias && bundle.chi) {
        auto prop = is_proper(*bundle.bias, *bundle.chi);
        quick("chi_proper", prop.ok);
        if (prop.ok) {
            report(circuit_axioms(circuits_chi(*bundle.bias, *bundle.chi)));
        }
    } else if (bundle.bias) {
        auto graph = bracelet_graph(*bundle.bias);
        bool shapes_ok = true;
        for (auto [i, j] : graph.adjacency) {
            if (bracelet_union_beta(*bundle.bias, graph.nodes[i], graph.nodes[j]) != 3) {
                shapes_ok = false;
            }
        }
        quick("bracelet_graph_adjacency", shapes_ok,
              json{{"nodes", graph.nodes.size()},
                   {"edges", graph.adjacency.size()},
                   {"components", graph.component_count}});
        if (bundle.homology) {
            bool pairs_ok = true;
            for (const auto& br : graph.nodes) {
                if ((*bundle.homology)[br.a] != (*bundle.homology)[br.b]) pairs_ok = false;
            }
            quick("bracelets_pair_equal_homology", pairs_ok);
        }
    } else {
        throw Error(ErrorKind::InvalidInput, "nothing to verify in this bundle");
    }
    return any_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"quasi-graphic matroid toolkit"};
    app.require_subcommand(1);
    app.add_flag("--pretty", pretty_output, "indent JSON output");

    // gen
    auto* gen = app.add_subcommand("gen", "generate an example instance bundle");
    std::string gen_name;
    gen->add_option("example", gen_name,
                    "complete-empty-bias | four-cycle-parity | kab-plus-cycles | torus-grid")
        ->required();
    int gen_n = 6, gen_a = 3, gen_b = 3, gen_m = 2, gen_maxlen = 0;
    std::string gen_side = "F";
    gen->add_option("--n", gen_n, "vertex count");
    gen->add_option("--a", gen_a, "first side size");
    gen->add_option("--b", gen_b, "second side size");
    gen->add_option("--m", gen_m, "torus parameter (grid is 2m x 2m)");
    gen->add_option("--side", gen_side, "L or F");
    gen->add_option("--max-cycle-len", gen_maxlen, "cap cycle length (torus only)");

    // validate
    auto* validate = app.add_subcommand("validate", "validate bundle files");
    std::vector<std::string> validate_files;
    validate->add_option("files", validate_files)->required();

    // rank
    auto* rank_cmd = app.add_subcommand("rank", "rank of an edge set");
    std::string rank_file, rank_set;
    rank_cmd->add_option("file", rank_file)->required();
    rank_cmd->add_option("--set", rank_set, "comma-separated edge indices")->required();

    // circuits / cocircuits / bases
    auto* circuits_cmd = app.add_subcommand("circuits", "emit the circuit family");
    std::string circuits_file;
    circuits_cmd->add_option("file", circuits_file)->required();
    auto* cocircuits_cmd = app.add_subcommand("cocircuits", "emit the cocircuit list");
    std::string cocircuits_file;
    cocircuits_cmd->add_option("file", cocircuits_file)->required();
    auto* bases_cmd = app.add_subcommand("bases", "emit all bases");
    std::string bases_file;
    bases_cmd->add_option("file", bases_file)->required();

    // minor
    auto* minor_cmd = app.add_subcommand("minor", "graph-level minor of a tripartition bundle");
    std::string minor_file, minor_delete, minor_contract;
    minor_cmd->add_option("file", minor_file)->required();
    minor_cmd->add_option("--delete", minor_delete, "edges to delete, comma-separated");
    minor_cmd->add_option("--contract", minor_contract, "edges to contract, comma-separated");

    // sum
    auto* sum_cmd = app.add_subcommand("sum", "link- or loop-sum of two bundles");
    std::string sum_kind, sum_file1, sum_file2;
    int sum_e1 = -1, sum_e2 = -1;
    sum_cmd->add_option("kind", sum_kind, "link | loop")->required();
    sum_cmd->add_option("file1", sum_file1)->required();
    sum_cmd->add_option("file2", sum_file2)->required();
    sum_cmd->add_option("--edge1", sum_e1, "basepoint edge in the first bundle")->required();
    sum_cmd->add_option("--edge2", sum_e2, "basepoint edge in the second bundle")->required();

    // ingleton
    auto* ingleton_cmd = app.add_subcommand("ingleton", "search for an Ingleton violation");
    std::string ingleton_file;
    ingleton_cmd->add_option("file", ingleton_file)->required();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification battery");
    std::vector<std::string> verify_files;
    std::string verify_suite = "full";
    std::uint64_t verify_seed = 1;
    long verify_cap = 0;
    verify_cmd->add_option("files", verify_files)->required();
    verify_cmd->add_option("--suite", verify_suite)->check(CLI::IsMember({"full", "fast"}));
    verify_cmd->add_option("--seed", verify_seed);
    verify_cmd->add_option("--cap", verify_cap, "override enumeration cap");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            io::Bundle bundle;
            if (gen_name == "complete-empty-bias") {
                auto t = examples::complete_empty_bias(gen_n, parse_side(gen_side));
                bundle.graph = t.graph;
                bundle.tri = std::move(t);
            } else if (gen_name == "four-cycle-parity") {
                auto t = examples::four_cycle_parity_complete(gen_n);
                bundle.graph = t.graph;
                bundle.tri = std::move(t);
            } else if (gen_name == "kab-plus-cycles") {
                auto t = examples::kab_plus_cycles(gen_a, gen_b, parse_side(gen_side));
                bundle.graph = t.graph;
                bundle.tri = std::move(t);
            } else if (gen_name == "torus-grid") {
                auto tg = examples::torus_grid(gen_m, 0, gen_maxlen);
                bundle.graph = tg.graph;
                bundle.bias = std::move(tg.biased);
                bundle.homology = std::move(tg.homology);
            } else {
                throw Error(ErrorKind::InvalidInput, "unknown example " + gen_name);
            }
            emit(io::bundle_to_json(bundle));
            return 0;
        }
        if (*validate) {
            for (const auto& f : validate_files) {
                auto bundle = io::load_bundle_file(f);
                json out{{"file", f}};
                if (bundle.tri) {
                    auto res = validate_proper(*bundle.tri);
                    if (res.kind == ProprietyViolation::Theta) {
                        out["status"] = "ThetaViolation";
                        out["theta"] = io::edge_set_to_json(res.theta.theta);
                        emit(out);
                        return 2;
                    }
                    if (res.kind == ProprietyViolation::Meet) {
                        out["status"] = "MeetViolation";
                        out["lift_cycle"] = io::edge_set_to_json(res.lift_cycle);
                        out["frame_cycle"] = io::edge_set_to_json(res.frame_cycle);
                        emit(out);
                        return 2;
                    }
                    out["status"] = "ok";
                } else if (bundle.bias) {
                    auto res = check_theta_property(*bundle.bias);
                    if (!res.ok) {
                        out["status"] = "ThetaViolation";
                        out["theta"] = io::edge_set_to_json(res.theta);
                        emit(out);
                        return 2;
                    }
                    if (bundle.chi) {
                        auto prop = is_proper(*bundle.bias, *bundle.chi);
                        if (!prop.ok) {
                            out["status"] = "ImproperChi";
                            emit(out);
                            return 2;
                        }
                    }
                    out["status"] = "ok";
                } else {
                    bundle.graph.validate();
                    out["status"] = "ok";
                }
                emit(out);
            }
            return 0;
        }
        if (*rank_cmd) {
            auto bundle = io::load_bundle_file(rank_file);
            auto t = require_tripartition(bundle);
            RankOracle oracle{t};
            auto x = parse_edge_list(rank_set);
            emit(json{{"set", x}, {"rank", oracle.rank(x)}});
            return 0;
        }
        if (*circuits_cmd) {
            auto bundle = io::load_bundle_file(circuits_file);
            if (bundle.tri) {
                emit(io::circuits_to_json(circuits(*bundle.tri)));
            } else if (bundle.bias && bundle.chi) {
                emit(io::circuits_to_json(circuits_chi(*bundle.bias, *bundle.chi)));
            } else {
                throw Error(ErrorKind::InvalidInput, "need a tripartition or bias+chi bundle");
            }
            return 0;
        }
        if (*cocircuits_cmd) {
            auto bundle = io::load_bundle_file(cocircuits_file);
            auto t = require_tripartition(bundle);
            json arr = json::array();
            for (const auto& c : cocircuits(t)) arr.push_back(io::edge_set_to_json(c));
            emit(json{{"cocircuits", arr}});
            return 0;
        }
        if (*bases_cmd) {
            auto bundle = io::load_bundle_file(bases_file);
            auto t = require_tripartition(bundle);
            json arr = json::array();
            for (const auto& b : bases(t)) arr.push_back(io::edge_set_to_json(b));
            emit(json{{"bases", arr}});
            return 0;
        }
        if (*minor_cmd) {
            auto bundle = io::load_bundle_file(minor_file);
            auto t = require_tripartition(bundle);
            auto deletions = parse_edge_list(minor_delete);
            auto contractions = parse_edge_list(minor_contract);
            std::vector<int> total_map(t.graph.edge_count());
            for (int e = 0; e < t.graph.edge_count(); ++e) total_map[e] = e;
            // apply contractions then deletions one edge at a time, tracking
            // the composite index map
            auto apply = [&](int old_edge, bool contract) {
                int cur = total_map[old_edge];
                if (cur < 0) throw Error(ErrorKind::InvalidInput, "edge removed twice");
                auto res = contract ? contract_edge(t, cur) : delete_edge(t, cur);
                t = res.part;
                for (auto& slot : total_map) {
                    if (slot >= 0) slot = res.edge_map[slot];
                }
            };
            for (int e : contractions) apply(e, true);
            for (int e : deletions) apply(e, false);
            io::Bundle out;
            out.graph = t.graph;
            out.tri = t;
            json j = io::bundle_to_json(out);
            j["edge_map"] = total_map;
            emit(j);
            return 0;
        }
        if (*sum_cmd) {
            auto b1 = io::load_bundle_file(sum_file1);
            auto b2 = io::load_bundle_file(sum_file2);
            if (sum_kind == "link") {
                auto t1 = require_tripartition(b1);
                auto res = link_sum(t1, sum_e1, b2.graph, sum_e2);
                io::Bundle out;
                out.graph = res.part.graph;
                out.tri = res.part;
                json j = io::bundle_to_json(out);
                j["map1"] = res.map1;
                j["map2"] = res.map2;
                emit(j);
                return 0;
            }
            if (sum_kind == "loop") {
                if (!b1.bias || !b2.bias) {
                    throw Error(ErrorKind::InvalidInput, "loop sum needs bias sections");
                }
                auto chi1 = b1.chi ? *b1.chi : constant_chi(*b1.bias, false);
                auto chi2 = b2.chi ? *b2.chi : constant_chi(*b2.bias, false);
                auto res = loop_sum(*b1.bias, sum_e1, chi1, *b2.bias, sum_e2, chi2);
                json j{{"graph", io::graph_to_json(res.graph)},
                       {"circuits", io::circuits_to_json(res.circuits)},
                       {"map1", res.map1},
                       {"map2", res.map2}};
                emit(j);
                return 0;
            }
            throw Error(ErrorKind::InvalidInput, "sum kind must be link or loop");
        }
        if (*ingleton_cmd) {
            auto bundle = io::load_bundle_file(ingleton_file);
            auto t = require_tripartition(bundle);
            auto witness = ingleton_search(t);
            if (witness) {
                emit(json{{"violation", true},
                          {"value", witness->value},
                          {"sets",
                           {witness->sets[0], witness->sets[1], witness->sets[2],
                            witness->sets[3]}}});
            } else {
                emit(json{{"violation", false}});
            }
            return 0;
        }
        if (*verify_cmd) {
            if (verify_cap > 0) {
                setenv("QUASIMATROID_CAP", std::to_string(verify_cap).c_str(), 1);
            }
            int rc = 0;
            for (const auto& f : verify_files) {
                auto bundle = io::load_bundle_file(f);
                rc = std::max(rc, run_verify_suite(bundle, verify_suite, verify_seed));
            }
            return rc;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: InvalidInput: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
