#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>

#include "core/syntax.hpp"

namespace scg {

// Directed multigraph over syntactic-category labels. Node identity is the
// label itself, which is what makes per-fragment graphs merge under union
// instead of growing disjointly. Ordered containers keep serialization
// byte-deterministic.
struct SourceCodeGraph {
  using Edge = std::pair<std::string, std::string>;

  std::set<std::string> nodes;
  std::map<Edge, int64_t> edges;  // multiplicity >= 1; self-loops allowed

  void add_node(std::string label) { nodes.insert(std::move(label)); }

  void add_edge(const std::string& src, const std::string& dst, int64_t multiplicity = 1) {
    nodes.insert(src);
    nodes.insert(dst);
    edges[{src, dst}] += multiplicity;
  }

  // Total multiplicity, self-loops included.
  int64_t edge_count() const {
    int64_t total = 0;
    for (const auto& [edge, mult] : edges) total += mult;
    return total;
  }

  bool operator==(const SourceCodeGraph&) const = default;
};

// Builds the graph of a category tree: one node per distinct label, one edge
// parent->child for every parent/child pair plus child_i->child_{i+1} for
// every adjacent sibling pair, multiplicities accumulating across repeats.
SourceCodeGraph tree_to_graph(const CategoryTree& tree);

// Node-set union with summed edge multiplicities; empty input gives the
// empty graph.
SourceCodeGraph union_graphs(std::span<const SourceCodeGraph> graphs);

// JSON-lines record for one (commit, side) graph: nodes sorted, edges sorted
// lexicographically as [src, dst, multiplicity] triples.
std::string graph_record_to_json(const std::string& commit_id, char side,
                                 const SourceCodeGraph& graph);

struct GraphRecord {
  std::string commit_id;
  char side;  // 'A' or 'D'
  SourceCodeGraph graph;
};

GraphRecord graph_record_from_json(const std::string& json_line);

}  // namespace scg
