#pragma once

#include <array>
#include <cstdint>

#include "core/graph.hpp"

namespace scg {

// Enumeration stops here; callers see the cap value plus a flag.
inline constexpr int64_t kCycleCap = 100000;

// The twelve structural attributes of a graph, one CSV column each, in the
// fixed f1..f12 order below. All metrics of the empty graph are zero.
struct GraphFeatureVector {
  double num_cycles = 0;      // f1: simple directed cycles of length >= 2
  double density = 0;         // f2: distinct non-loop edges / N(N-1)
  double num_nodes = 0;       // f3
  double num_edges = 0;       // f4: multiplicity-weighted, self-loops included
  double avg_in_degree = 0;   // f5
  double avg_out_degree = 0;  // f6
  double max_degree = 0;      // f7
  double min_degree = 0;      // f8
  double sum_degree = 0;      // f9: always 2 * num_edges
  double avg_degree = 0;      // f10
  double median_degree = 0;   // f11
  double num_self_loops = 0;  // f12: multiplicity-weighted

  bool cycle_cap_hit = false;  // not a feature column; reported in logs

  std::array<double, 12> as_array() const {
    return {num_cycles, density,    num_nodes,  num_edges,
            avg_in_degree, avg_out_degree, max_degree, min_degree,
            sum_degree, avg_degree, median_degree, num_self_loops};
  }

  bool operator==(const GraphFeatureVector&) const = default;
};

inline constexpr std::array<const char*, 12> kFeatureColumnNames = {
    "f1", "f2", "f3", "f4", "f5", "f6", "f7", "f8", "f9", "f10", "f11", "f12"};

// Number of distinct simple directed cycles (length >= 2) in the
// simple-digraph projection: multiplicities collapse and self-loops are
// ignored (they are their own metric). Johnson's algorithm; enumeration
// stops at kCycleCap and returns the cap with *cap_hit set.
int64_t count_simple_cycles(const SourceCodeGraph& graph, bool* cap_hit = nullptr);

GraphFeatureVector compute_metrics(const SourceCodeGraph& graph);

}  // namespace scg
