#include "core/graph_metrics.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace scg {

namespace {

// Simple-digraph projection with integer vertex ids: deduplicated edges,
// self-loops dropped. Vertex ids follow the (sorted) node order, so the
// enumeration below is deterministic.
struct SimpleDigraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
};

SimpleDigraph project(const SourceCodeGraph& graph) {
  SimpleDigraph simple;
  std::unordered_map<std::string, int> id;
  id.reserve(graph.nodes.size());
  for (const std::string& node : graph.nodes) {
    id.emplace(node, simple.n++);
  }
  simple.adj.resize(static_cast<size_t>(simple.n));
  for (const auto& [edge, mult] : graph.edges) {
    const int src = id.at(edge.first);
    const int dst = id.at(edge.second);
    if (src != dst) simple.adj[static_cast<size_t>(src)].push_back(dst);
  }
  for (auto& list : simple.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return simple;
}

// Tarjan SCC over the subgraph induced by `allowed` vertices, returning the
// component id per vertex (-1 for excluded vertices). Iterative to keep the
// stack flat on adversarial inputs.
std::vector<int> strongly_connected_components(const SimpleDigraph& g,
                                               const std::vector<char>& allowed) {
  const int n = g.n;
  std::vector<int> comp(static_cast<size_t>(n), -1);
  std::vector<int> index(static_cast<size_t>(n), -1);
  std::vector<int> lowlink(static_cast<size_t>(n), 0);
  std::vector<char> on_stack(static_cast<size_t>(n), 0);
  std::vector<int> stack;
  int next_index = 0;
  int next_comp = 0;

  struct Frame {
    int v;
    size_t child;
  };
  std::vector<Frame> call_stack;

  for (int start = 0; start < n; ++start) {
    if (!allowed[static_cast<size_t>(start)] || index[static_cast<size_t>(start)] != -1)
      continue;
    call_stack.push_back({start, 0});
    index[static_cast<size_t>(start)] = lowlink[static_cast<size_t>(start)] = next_index++;
    stack.push_back(start);
    on_stack[static_cast<size_t>(start)] = 1;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const int v = frame.v;
      const auto& neighbors = g.adj[static_cast<size_t>(v)];
      bool descended = false;
      while (frame.child < neighbors.size()) {
        const int w = neighbors[frame.child++];
        if (!allowed[static_cast<size_t>(w)]) continue;
        if (index[static_cast<size_t>(w)] == -1) {
          index[static_cast<size_t>(w)] = lowlink[static_cast<size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<size_t>(w)] = 1;
          call_stack.push_back({w, 0});
          descended = true;
          break;
        }
        if (on_stack[static_cast<size_t>(w)]) {
          lowlink[static_cast<size_t>(v)] =
              std::min(lowlink[static_cast<size_t>(v)], index[static_cast<size_t>(w)]);
        }
      }
      if (descended) continue;
      if (lowlink[static_cast<size_t>(v)] == index[static_cast<size_t>(v)]) {
        while (true) {
          const int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = 0;
          comp[static_cast<size_t>(w)] = next_comp;
          if (w == v) break;
        }
        ++next_comp;
      }
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const int parent = call_stack.back().v;
        lowlink[static_cast<size_t>(parent)] =
            std::min(lowlink[static_cast<size_t>(parent)], lowlink[static_cast<size_t>(v)]);
      }
    }
  }
  return comp;
}

// Johnson's circuit enumeration restricted to cycles whose minimum vertex is
// `start`, within the SCC mask. Counts only; aborts once the cap is reached.
class CircuitCounter {
 public:
  CircuitCounter(const SimpleDigraph& g, const std::vector<char>& in_scope,
                 int start, int64_t cap, int64_t initial)
      : g_(g),
        in_scope_(in_scope),
        start_(start),
        cap_(cap),
        count_(initial),
        blocked_(static_cast<size_t>(g.n), 0),
        block_lists_(static_cast<size_t>(g.n)) {}

  int64_t run() {
    circuit(start_);
    return count_;
  }

  bool cap_hit() const { return cap_hit_; }

 private:
  bool circuit(int v) {
    if (cap_hit_) return false;
    bool found = false;
    blocked_[static_cast<size_t>(v)] = 1;
    for (const int w : g_.adj[static_cast<size_t>(v)]) {
      if (!in_scope_[static_cast<size_t>(w)]) continue;
      if (w == start_) {
        ++count_;
        found = true;
        if (count_ >= cap_) {
          cap_hit_ = true;
          return true;
        }
      } else if (!blocked_[static_cast<size_t>(w)]) {
        if (circuit(w)) found = true;
        if (cap_hit_) return found;
      }
    }
    if (found) {
      unblock(v);
    } else {
      for (const int w : g_.adj[static_cast<size_t>(v)]) {
        if (!in_scope_[static_cast<size_t>(w)]) continue;
        auto& list = block_lists_[static_cast<size_t>(w)];
        if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
      }
    }
    return found;
  }

  void unblock(int v) {
    blocked_[static_cast<size_t>(v)] = 0;
    auto& list = block_lists_[static_cast<size_t>(v)];
    while (!list.empty()) {
      const int w = list.back();
      list.pop_back();
      if (blocked_[static_cast<size_t>(w)]) unblock(w);
    }
  }

  const SimpleDigraph& g_;
  const std::vector<char>& in_scope_;
  const int start_;
  const int64_t cap_;
  int64_t count_;
  bool cap_hit_ = false;
  std::vector<char> blocked_;
  std::vector<std::vector<int>> block_lists_;
};

}  // namespace

int64_t count_simple_cycles(const SourceCodeGraph& graph, bool* cap_hit) {
  if (cap_hit != nullptr) *cap_hit = false;
  const SimpleDigraph simple = project(graph);
  int64_t total = 0;
  for (int start = 0; start < simple.n; ++start) {
    // Only vertices >= start participate, so every cycle is counted exactly
    // once: at its minimum vertex.
    std::vector<char> allowed(static_cast<size_t>(simple.n), 0);
    for (int v = start; v < simple.n; ++v) allowed[static_cast<size_t>(v)] = 1;
    const std::vector<int> comp = strongly_connected_components(simple, allowed);
    const int start_comp = comp[static_cast<size_t>(start)];
    std::vector<char> in_scope(static_cast<size_t>(simple.n), 0);
    int scc_size = 0;
    for (int v = 0; v < simple.n; ++v) {
      if (comp[static_cast<size_t>(v)] == start_comp && allowed[static_cast<size_t>(v)]) {
        in_scope[static_cast<size_t>(v)] = 1;
        ++scc_size;
      }
    }
    if (scc_size < 2) continue;
    CircuitCounter counter(simple, in_scope, start, kCycleCap, total);
    total = counter.run();
    if (counter.cap_hit()) {
      if (cap_hit != nullptr) *cap_hit = true;
      return kCycleCap;
    }
  }
  return total;
}

GraphFeatureVector compute_metrics(const SourceCodeGraph& graph) {
  GraphFeatureVector features;
  const size_t n = graph.nodes.size();
  features.num_nodes = static_cast<double>(n);
  if (n == 0) return features;

  std::unordered_map<std::string, int64_t> in_degree;
  std::unordered_map<std::string, int64_t> out_degree;
  for (const std::string& node : graph.nodes) {
    in_degree[node] = 0;
    out_degree[node] = 0;
  }

  int64_t total_multiplicity = 0;
  int64_t self_loops = 0;
  int64_t distinct_plain_edges = 0;
  for (const auto& [edge, mult] : graph.edges) {
    total_multiplicity += mult;
    out_degree[edge.first] += mult;
    in_degree[edge.second] += mult;
    if (edge.first == edge.second) self_loops += mult;
    else ++distinct_plain_edges;
  }

  std::vector<int64_t> degrees;
  degrees.reserve(n);
  for (const std::string& node : graph.nodes) {
    degrees.push_back(in_degree[node] + out_degree[node]);
  }
  std::sort(degrees.begin(), degrees.end());

  features.num_edges = static_cast<double>(total_multiplicity);
  features.num_self_loops = static_cast<double>(self_loops);
  features.sum_degree = 2.0 * static_cast<double>(total_multiplicity);
  features.avg_in_degree = static_cast<double>(total_multiplicity) / static_cast<double>(n);
  features.avg_out_degree = features.avg_in_degree;
  features.avg_degree = features.sum_degree / static_cast<double>(n);
  features.min_degree = static_cast<double>(degrees.front());
  features.max_degree = static_cast<double>(degrees.back());
  features.median_degree =
      (n % 2 == 1)
          ? static_cast<double>(degrees[n / 2])
          : (static_cast<double>(degrees[n / 2 - 1]) + static_cast<double>(degrees[n / 2])) / 2.0;
  features.density =
      (n > 1) ? static_cast<double>(distinct_plain_edges) /
                    (static_cast<double>(n) * static_cast<double>(n - 1))
              : 0.0;

  bool cap_hit = false;
  features.num_cycles = static_cast<double>(count_simple_cycles(graph, &cap_hit));
  features.cycle_cap_hit = cap_hit;
  return features;
}

}  // namespace scg
