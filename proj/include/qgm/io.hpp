#ifndef QGM_IO_HPP
#define QGM_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "qgm/examples.hpp"
#include "qgm/matroid.hpp"

namespace qgm {
namespace io {

using nlohmann::json;

/// One instance file: a graph plus whichever of tripartition / bias / chi /
/// homology sections are present. Rule-based sections are compiled to
/// extensional form on load.
struct Bundle {
    Multigraph graph;
    std::optional<Tripartition> tri;
    std::optional<BiasedGraph> bias;
    std::optional<BraceletFunction> chi;
    std::optional<std::vector<std::pair<int, int>>> homology;
};

json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const json& j);

json edge_set_to_json(const EdgeSet& x);
EdgeSet edge_set_from_json(const json& j);

json tripartition_to_json(const Tripartition& t);
json bias_to_json(const BiasedGraph& bg);
json chi_to_json(const BiasedGraph& bg, const BraceletFunction& chi);

json bundle_to_json(const Bundle& b);
Bundle bundle_from_json(const json& j);

Bundle load_bundle_file(const std::string& path); // "-" reads stdin

json circuits_to_json(const CircuitFamily& cf);

} // namespace io
} // namespace qgm

#endif
