#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/error.hpp"
#include "minorkit/rational.hpp"

namespace minorkit {

/// Position of an edge in Graph::edges(). The flow-graph index of the same
/// edge is n + position + 1.
using EdgePos = std::size_t;
using EdgeSet = std::vector<EdgePos>;

struct Edge {
  int u = 0;  // u < v always
  int v = 0;
  std::optional<Rational> gain;
};

/// Simple undirected graph on vertices 1..n with indexed edges and optional
/// positive per-edge gains. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) fail(ErrorCode::InvalidInput, "negative vertex count");
    adjacency_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (std::size_t pos = 0; pos < edges_.size(); ++pos) {
      Edge& e = edges_[pos];
      if (e.u == e.v) fail(ErrorCode::InvalidInput, "self-loop at " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 1 || e.v > n_)
        fail(ErrorCode::InvalidInput,
             "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
      if (e.gain && *e.gain <= 0)
        fail(ErrorCode::InvalidInput, "gains must be strictly positive");
      if (!index_.emplace(std::pair{e.u, e.v}, pos).second)
        fail(ErrorCode::InvalidInput,
             "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  }

  /// Convenience for topology-only graphs.
  static Graph from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs) edges.push_back({u, v, std::nullopt});
    return Graph(n, std::move(edges));
  }

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgePos pos) const { return edges_.at(pos); }

  const std::vector<int>& neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  std::size_t degree(int v) const { return neighbors(v).size(); }

  std::optional<EdgePos> find_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = index_.find({a, b});
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool adjacent(int a, int b) const { return find_edge(a, b).has_value(); }

  /// Flow-graph row index (1-based) of the edge at `pos`.
  std::size_t flow_index(EdgePos pos) const { return static_cast<std::size_t>(n_) + pos + 1; }

  bool has_all_gains() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.gain.has_value(); });
  }

  /// Same graph with every gain dropped.
  Graph topology() const {
    std::vector<Edge> edges = edges_;
    for (auto& e : edges) e.gain.reset();
    return Graph(n_, std::move(edges));
  }

  Graph with_gains(const std::vector<Rational>& gains) const {
    if (gains.size() != edges_.size()) fail(ErrorCode::InvalidInput, "gain count mismatch");
    std::vector<Edge> edges = edges_;
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].gain = gains[i];
    return Graph(n_, std::move(edges));
  }

  /// Sorted (u,v) list; identifies the graph up to edge order.
  std::vector<std::pair<int, int>> edge_pairs() const {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_) pairs.emplace_back(e.u, e.v);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
  }

  bool same_topology(const Graph& other) const {
    return n_ == other.n_ && edge_pairs() == other.edge_pairs();
  }

  /// FNV-1a over n and the sorted edge list.
  std::uint64_t checksum() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
      for (int i = 0; i < 8; ++i) {
        h ^= (x >> (8 * i)) & 0xffu;
        h *= 1099511628211ull;
      }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (auto [u, v] : edge_pairs()) {
      mix(static_cast<std::uint64_t>(u));
      mix(static_cast<std::uint64_t>(v));
    }
    return h;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::map<std::pair<int, int>, EdgePos> index_;
};

/// Membership mask over edge positions.
inline std::vector<bool> edge_mask(const Graph& g, const EdgeSet& edges) {
  std::vector<bool> mask(g.edge_count(), false);
  for (EdgePos pos : edges) {
    if (pos >= g.edge_count()) fail(ErrorCode::InvalidInput, "edge position out of range");
    mask[pos] = true;
  }
  return mask;
}

/// Component id (0-based, ordered by smallest member) of every vertex of
/// g minus `removed`. Index 0 of the result is unused.
inline std::vector<int> component_labels(const Graph& g, const EdgeSet& removed = {}) {
  const auto skip = edge_mask(g, removed);
  std::vector<int> label(static_cast<std::size_t>(g.n()) + 1, -1);
  int next = 0;
  for (int start = 1; start <= g.n(); ++start) {
    if (label[start] != -1) continue;
    label[start] = next;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      for (int y : g.neighbors(x)) {
        if (label[y] != -1 || skip[*g.find_edge(x, y)]) continue;
        label[y] = next;
        frontier.push(y);
      }
    }
    ++next;
  }
  return label;
}

/// Connected components of g minus `removed`, each sorted, ordered by their
/// smallest vertex.
inline std::vector<std::vector<int>> components(const Graph& g, const EdgeSet& removed = {}) {
  const auto label = component_labels(g, removed);
  int count = 0;
  for (int v = 1; v <= g.n(); ++v) count = std::max(count, label[v] + 1);
  std::vector<std::vector<int>> parts(static_cast<std::size_t>(count));
  for (int v = 1; v <= g.n(); ++v) parts[label[v]].push_back(v);
  return parts;
}

inline bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

inline bool is_bridge(const Graph& g, EdgePos pos) {
  if (pos >= g.edge_count()) fail(ErrorCode::InvalidInput, "edge position out of range");
  const auto label = component_labels(g, {pos});
  return label[g.edge(pos).u] != label[g.edge(pos).v];
}

inline bool is_tree(const Graph& g) {
  return g.n() >= 1 && g.edge_count() + 1 == static_cast<std::size_t>(g.n()) && is_connected(g);
}

/// Vertex path inside g minus `removed` from `from` to `to` (BFS, smallest
/// ids first). Empty when unreachable.
inline std::vector<int> find_path(const Graph& g, int from, int to, const EdgeSet& removed = {}) {
  const auto skip = edge_mask(g, removed);
  std::vector<int> parent(static_cast<std::size_t>(g.n()) + 1, 0);
  std::queue<int> frontier;
  parent[from] = from;
  frontier.push(from);
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop();
    if (x == to) break;
    for (int y : g.neighbors(x)) {
      if (parent[y] != 0 || skip[*g.find_edge(x, y)]) continue;
      parent[y] = x;
      frontier.push(y);
    }
  }
  if (parent[to] == 0) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

struct CycleOracleLimits {
  int max_vertices = 10;
  std::size_t max_cycles = 10000;
};

/// Every simple cycle of g as a sorted set of edge positions. Exponential;
/// meant as a brute-force oracle for small graphs only.
inline std::vector<EdgeSet> enumerate_cycles(const Graph& g, CycleOracleLimits limits = {}) {
  if (g.n() > limits.max_vertices)
    fail(ErrorCode::OracleTooLarge, "cycle oracle limited to " + std::to_string(limits.max_vertices) +
                                        " vertices, got " + std::to_string(g.n()));
  std::vector<EdgeSet> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(g.n()) + 1, false);

  // Cycles are rooted at their smallest vertex; the direction is fixed by
  // requiring the second vertex to be smaller than the last one.
  auto record = [&] {
    if (path.size() < 3 || path[1] > path.back()) return;
    EdgeSet cycle;
    for (std::size_t i = 0; i < path.size(); ++i)
      cycle.push_back(*g.find_edge(path[i], path[(i + 1) % path.size()]));
    std::sort(cycle.begin(), cycle.end());
    cycles.push_back(std::move(cycle));
    if (cycles.size() > limits.max_cycles)
      fail(ErrorCode::OracleTooLarge, "more than " + std::to_string(limits.max_cycles) + " cycles");
  };

  auto dfs = [&](auto&& self, int root, int x) -> void {
    for (int y : g.neighbors(x)) {
      if (y == root) {
        record();
      } else if (y > root && !on_path[y]) {
        on_path[y] = true;
        path.push_back(y);
        self(self, root, y);
        path.pop_back();
        on_path[y] = false;
      }
    }
  };

  for (int root = 1; root <= g.n(); ++root) {
    path = {root};
    on_path[root] = true;
    dfs(dfs, root, root);
    on_path[root] = false;
  }
  return cycles;
}

}  // namespace minorkit
