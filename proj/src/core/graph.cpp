#include "core/graph.hpp"

#include <json.hpp>

#include "core/error.hpp"

namespace scg {

namespace {

void walk(const CategoryNode& node, SourceCodeGraph& graph) {
  const std::string label = category_name(node.label);
  graph.add_node(label);
  for (size_t i = 0; i < node.children.size(); ++i) {
    const std::string child_label = category_name(node.children[i].label);
    graph.add_edge(label, child_label);
    if (i + 1 < node.children.size()) {
      graph.add_edge(child_label, category_name(node.children[i + 1].label));
    }
    walk(node.children[i], graph);
  }
}

}  // namespace

SourceCodeGraph tree_to_graph(const CategoryTree& tree) {
  SourceCodeGraph graph;
  walk(tree.root, graph);
  return graph;
}

SourceCodeGraph union_graphs(std::span<const SourceCodeGraph> graphs) {
  SourceCodeGraph merged;
  for (const SourceCodeGraph& g : graphs) {
    merged.nodes.insert(g.nodes.begin(), g.nodes.end());
    for (const auto& [edge, mult] : g.edges) merged.edges[edge] += mult;
  }
  return merged;
}

std::string graph_record_to_json(const std::string& commit_id, char side,
                                 const SourceCodeGraph& graph) {
  nlohmann::ordered_json record;
  record["commit_id"] = commit_id;
  record["side"] = std::string(1, side);
  record["nodes"] = nlohmann::json::array();
  for (const std::string& node : graph.nodes) record["nodes"].push_back(node);
  record["edges"] = nlohmann::json::array();
  for (const auto& [edge, mult] : graph.edges) {
    record["edges"].push_back({edge.first, edge.second, mult});
  }
  return record.dump();
}

GraphRecord graph_record_from_json(const std::string& json_line) {
  nlohmann::json record;
  try {
    record = nlohmann::json::parse(json_line);
  } catch (const nlohmann::json::parse_error& e) {
    throw_data(std::string("invalid graph record: ") + e.what());
  }
  GraphRecord out;
  try {
    out.commit_id = record.at("commit_id").get<std::string>();
    const std::string side = record.at("side").get<std::string>();
    if (side != "A" && side != "D") throw_data("graph record side must be A or D");
    out.side = side[0];
    for (const auto& node : record.at("nodes")) {
      out.graph.add_node(node.get<std::string>());
    }
    for (const auto& edge : record.at("edges")) {
      if (!edge.is_array() || edge.size() != 3) {
        throw_data("graph record edge must be [src, dst, multiplicity]");
      }
      const int64_t mult = edge[2].get<int64_t>();
      if (mult <= 0) throw_data("graph record multiplicity must be positive");
      out.graph.add_edge(edge[0].get<std::string>(), edge[1].get<std::string>(), mult);
    }
  } catch (const nlohmann::json::exception& e) {
    throw_data(std::string("invalid graph record: ") + e.what());
  }
  return out;
}

}  // namespace scg
