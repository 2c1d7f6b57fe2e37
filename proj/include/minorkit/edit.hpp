#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"

namespace minorkit {

enum class EditKind { VertexDelete, EdgeDelete, Contract };

inline const char* to_string(EditKind kind) {
  switch (kind) {
    case EditKind::VertexDelete: return "vertex_delete";
    case EditKind::EdgeDelete: return "edge_delete";
    case EditKind::Contract: return "contract";
  }
  return "?";
}

/// One edit operation together with the snapshot needed to undo it.
///
/// Label conventions (all labels refer to the graph the op is applied to):
///  - VertexDelete(a): vertices above `a` shift down by one.
///  - EdgeDelete(a, b): labels unchanged; `nbrs_b` is N(b) after deletion.
///  - Contract(a, b), a < b: if b is not the top label n, labels b and n are
///    swapped first (`swapped` records it), then n is merged into a.
///    `nbrs_a`/`nbrs_b` are N(a)/N(n) in the swapped graph.
struct EditOp {
  EditKind kind = EditKind::VertexDelete;
  int a = 0;
  int b = 0;
  int n_before = 0;
  bool swapped = false;
  std::vector<int> nbrs_a;
  std::vector<int> nbrs_b;

  int n_after() const { return kind == EditKind::EdgeDelete ? n_before : n_before - 1; }

  /// Label in the pre-op graph of the vertex carrying `label` afterwards.
  /// For a contraction the merged vertex maps to `a`.
  int origin(int label) const {
    switch (kind) {
      case EditKind::VertexDelete: return label < a ? label : label + 1;
      case EditKind::EdgeDelete: return label;
      case EditKind::Contract: return (swapped && label == b) ? n_before : label;
    }
    return label;
  }
};

namespace detail {

inline Graph relabel_swap(const Graph& g, int x, int y) {
  if (x == y) return g;
  auto map = [&](int v) { return v == x ? y : (v == y ? x : v); };
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back({map(e.u), map(e.v), e.gain});
  return Graph(g.n(), std::move(edges));
}

}  // namespace detail

inline EditOp make_vertex_delete(const Graph& g, int v) {
  if (v < 1 || v > g.n()) fail(ErrorCode::InvalidEdit, "no vertex " + std::to_string(v));
  EditOp op;
  op.kind = EditKind::VertexDelete;
  op.a = v;
  op.n_before = g.n();
  op.nbrs_a = g.neighbors(v);
  return op;
}

/// Deleting (u, v); on re-insertion `v` is the endpoint that receives the
/// enclosing slab box.
inline EditOp make_edge_delete(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v))
    fail(ErrorCode::InvalidEdit, "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  EditOp op;
  op.kind = EditKind::EdgeDelete;
  op.a = u;
  op.b = v;
  op.n_before = g.n();
  for (int w : g.neighbors(v))
    if (w != u) op.nbrs_b.push_back(w);
  return op;
}

inline EditOp make_contract(const Graph& g, int x, int y) {
  if (!g.adjacent(x, y))
    fail(ErrorCode::InvalidEdit, "no edge (" + std::to_string(x) + "," + std::to_string(y) + ")");
  EditOp op;
  op.kind = EditKind::Contract;
  op.a = std::min(x, y);
  op.b = std::max(x, y);
  op.n_before = g.n();
  op.swapped = op.b != g.n();
  const Graph swapped = detail::relabel_swap(g, op.b, g.n());
  op.nbrs_a = swapped.neighbors(op.a);
  op.nbrs_b = swapped.neighbors(g.n());
  return op;
}

/// Graph after `op`. Gains survive on untouched edges; contraction-created
/// edges carry none.
inline Graph apply_edit(const Graph& g, const EditOp& op) {
  if (op.n_before != g.n()) fail(ErrorCode::InvalidEdit, "edit expects a graph on " + std::to_string(op.n_before) + " vertices");
  std::vector<Edge> edges;
  switch (op.kind) {
    case EditKind::VertexDelete: {
      if (op.a < 1 || op.a > g.n()) fail(ErrorCode::InvalidEdit, "no vertex " + std::to_string(op.a));
      auto shift = [&](int w) { return w < op.a ? w : w - 1; };
      for (const Edge& e : g.edges())
        if (e.u != op.a && e.v != op.a) edges.push_back({shift(e.u), shift(e.v), e.gain});
      return Graph(g.n() - 1, std::move(edges));
    }
    case EditKind::EdgeDelete: {
      const auto pos = g.find_edge(op.a, op.b);
      if (!pos) fail(ErrorCode::InvalidEdit, "no edge (" + std::to_string(op.a) + "," + std::to_string(op.b) + ")");
      for (EdgePos p = 0; p < g.edge_count(); ++p)
        if (p != *pos) edges.push_back(g.edge(p));
      return Graph(g.n(), std::move(edges));
    }
    case EditKind::Contract: {
      if (!g.adjacent(op.a, op.b))
        fail(ErrorCode::InvalidEdit, "no edge (" + std::to_string(op.a) + "," + std::to_string(op.b) + ")");
      const int top = g.n();
      const Graph h = detail::relabel_swap(g, op.b, top);
      for (const Edge& e : h.edges())
        if (e.u != top && e.v != top) edges.push_back(e);
      Graph without_top(top - 1, edges);
      for (int w : h.neighbors(top))
        if (w != op.a && !without_top.adjacent(op.a, w)) edges.push_back({op.a, w, std::nullopt});
      return Graph(top - 1, std::move(edges));
    }
  }
  fail(ErrorCode::InvalidEdit, "unknown edit kind");
}

/// Rebuilds the pre-op topology from the post-op graph and the snapshot.
inline Graph invert_edit(const Graph& h, const EditOp& op) {
  if (op.n_after() != h.n()) fail(ErrorCode::BadSnapshot, "snapshot does not match graph size");
  std::vector<Edge> edges;
  switch (op.kind) {
    case EditKind::VertexDelete: {
      for (const Edge& e : h.edges()) edges.push_back({op.origin(e.u), op.origin(e.v), e.gain});
      for (int w : op.nbrs_a) edges.push_back({op.a, w, std::nullopt});
      return Graph(op.n_before, std::move(edges));
    }
    case EditKind::EdgeDelete: {
      edges = h.edges();
      edges.push_back({op.a, op.b, std::nullopt});
      return Graph(op.n_before, std::move(edges));
    }
    case EditKind::Contract: {
      const int top = op.n_before;
      for (const Edge& e : h.edges())
        if (e.u != op.a && e.v != op.a) edges.push_back(e);
      for (int w : op.nbrs_a) edges.push_back({op.a, w, std::nullopt});
      for (int w : op.nbrs_b)
        if (w != op.a) edges.push_back({top, w, std::nullopt});
      Graph swapped(top, std::move(edges));
      return op.swapped ? detail::relabel_swap(swapped, op.b, top) : swapped;
    }
  }
  fail(ErrorCode::InvalidEdit, "unknown edit kind");
}

struct EditCounts {
  int vertex_deletions = 0;
  int edge_deletions = 0;
  int contractions = 0;
};

/// Ordered edit operations taking `original` down to `base`.
struct EditSequence {
  Graph base;
  std::vector<EditOp> ops;
  std::vector<std::uint64_t> checksums;  // graph after each op
  std::uint64_t original_checksum = 0;
  EditCounts counts;
};

inline EditCounts count_ops(const std::vector<EditOp>& ops) {
  EditCounts c;
  for (const auto& op : ops) {
    if (op.kind == EditKind::VertexDelete) ++c.vertex_deletions;
    if (op.kind == EditKind::EdgeDelete) ++c.edge_deletions;
    if (op.kind == EditKind::Contract) ++c.contractions;
  }
  return c;
}

/// Applies `ops` one by one and records checksums.
inline EditSequence make_sequence(const Graph& g, std::vector<EditOp> ops) {
  EditSequence seq;
  seq.original_checksum = g.checksum();
  Graph current = g;
  for (const auto& op : ops) {
    current = apply_edit(current, op);
    seq.checksums.push_back(current.checksum());
  }
  seq.base = current;
  seq.counts = count_ops(ops);
  seq.ops = std::move(ops);
  return seq;
}

/// All intermediate graphs g = G_0, ..., G_r = base; checks every checksum.
inline std::vector<Graph> replay(const Graph& g, const EditSequence& seq) {
  if (g.checksum() != seq.original_checksum) fail(ErrorCode::SequenceMismatch, "sequence was recorded for another graph");
  if (seq.checksums.size() != seq.ops.size()) fail(ErrorCode::SequenceMismatch, "checksum count differs from op count");
  std::vector<Graph> chain{g};
  for (std::size_t i = 0; i < seq.ops.size(); ++i) {
    chain.push_back(apply_edit(chain.back(), seq.ops[i]));
    if (chain.back().checksum() != seq.checksums[i])
      fail(ErrorCode::SequenceMismatch, "checksum mismatch after op " + std::to_string(i));
  }
  if (!chain.back().same_topology(seq.base)) fail(ErrorCode::SequenceMismatch, "replay does not reach the base graph");
  const auto c = count_ops(seq.ops);
  if (c.vertex_deletions != seq.counts.vertex_deletions || c.edge_deletions != seq.counts.edge_deletions ||
      c.contractions != seq.counts.contractions)
    fail(ErrorCode::SequenceMismatch, "op tallies do not match the op list");
  return chain;
}

/// Deletes every non-tree edge of the BFS tree rooted at vertex 1
/// (neighbours visited in increasing order), in edge-list order.
inline EditSequence reduce_to_spanning_tree(const Graph& g) {
  if (g.n() < 2) fail(ErrorCode::InvalidInput, "need at least two vertices");
  if (!is_connected(g)) fail(ErrorCode::Disconnected, "graph is not connected");
  std::vector<bool> in_tree(g.edge_count(), false);
  std::vector<bool> seen(static_cast<std::size_t>(g.n()) + 1, false);
  std::queue<int> frontier;
  seen[1] = true;
  frontier.push(1);
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop();
    for (int y : g.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = true;
      in_tree[*g.find_edge(x, y)] = true;
      frontier.push(y);
    }
  }
  std::vector<EditOp> ops;
  Graph current = g;
  for (EdgePos p = 0; p < g.edge_count(); ++p) {
    if (in_tree[p]) continue;
    ops.push_back(make_edge_delete(current, g.edge(p).u, g.edge(p).v));
    current = apply_edit(current, ops.back());
  }
  return make_sequence(g, std::move(ops));
}

}  // namespace minorkit
