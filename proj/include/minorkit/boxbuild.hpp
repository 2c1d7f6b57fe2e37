#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/box.hpp"
#include "minorkit/edit.hpp"
#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/rational.hpp"

namespace minorkit {

// ---------------------------------------------------------------------------
// Base representations in the plane
// ---------------------------------------------------------------------------

/// Dimension-2 strong representation of a tree with at least three vertices.
///
/// Vertex 1 gets the unit square. Every vertex owns a free segment [l, r] on
/// its top facet together with a clearance half-height; the rectangle
/// [l, r] x [top - clearance, top + clearance] meets no other box. A child is
/// a square centred on the top facet inside the left half of that segment,
/// after which the parent keeps only the right half. The child's own free
/// segment is its top facet with a quarter of its side as clearance.
inline Representation build_tree_rep(const Graph& tree) {
  if (!is_tree(tree)) fail(ErrorCode::NotATree, "input graph is not a tree");
  if (tree.n() < 3) fail(ErrorCode::TooSmall, "tree builder needs at least three vertices");

  struct Zone {
    Rational left, right, top, clearance;
  };
  const auto n = static_cast<std::size_t>(tree.n());
  std::vector<Box> boxes(n);
  std::vector<Zone> zone(n + 1);
  std::vector<bool> placed(n + 1, false);

  boxes[0] = Box({{0, 1}, {0, 1}});
  zone[1] = {0, 1, 1, Rational(1, 4)};
  placed[1] = true;
  std::queue<int> frontier;
  frontier.push(1);
  while (!frontier.empty()) {
    const int parent = frontier.front();
    frontier.pop();
    for (int child : tree.neighbors(parent)) {
      if (placed[child]) continue;
      placed[child] = true;
      Zone& z = zone[parent];
      const Rational width = z.right - z.left;
      const Rational side = std::min(Rational(width / 4), z.clearance);
      const Rational x0 = z.left + width / 8;
      boxes[child - 1] = Box({{x0, x0 + side}, {z.top - side / 2, z.top + side / 2}});
      zone[child] = {x0, x0 + side, z.top + side / 2, side / 4};
      z.left += width / 2;
      frontier.push(child);
    }
  }

  Representation rep(2, std::move(boxes));
  for (int v = 1; v <= tree.n(); ++v) {
    const Zone& z = zone[v];
    const Rational mid = (z.left + z.right) / 2;
    rep.set_witness(v, {{mid, z.top}, std::min(Rational(z.right - z.left), z.clearance) / 2});
  }
  return rep;
}

/// Threshold graph: clique 1..n_clique, stable vertex n_clique+i adjacent to
/// clique vertices 1..sizes[i-1].
inline void check_threshold_params(int n_clique, const std::vector<int>& sizes) {
  if (n_clique < 1) fail(ErrorCode::BadNesting, "clique needs at least one vertex");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1 || sizes[i] > n_clique)
      fail(ErrorCode::BadNesting, "neighbourhood size " + std::to_string(sizes[i]) + " outside [1, n_clique]");
    if (i > 0 && sizes[i] > sizes[i - 1]) fail(ErrorCode::BadNesting, "neighbourhood sizes must be non-increasing");
  }
}

inline Graph threshold_graph(int n_clique, const std::vector<int>& sizes) {
  check_threshold_params(n_clique, sizes);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n_clique; ++i)
    for (int j = i + 1; j <= n_clique; ++j) pairs.emplace_back(i, j);
  for (std::size_t s = 0; s < sizes.size(); ++s)
    for (int j = 1; j <= sizes[s]; ++j) pairs.emplace_back(j, n_clique + 1 + static_cast<int>(s));
  return Graph::from_pairs(n_clique + static_cast<int>(sizes.size()), pairs);
}

/// Clique vertex i is the 1/i x i rectangle centred at the origin. Stable
/// vertex n+i is a thin strip whose left edge sits strictly between
/// x = 1/(2(l_i+1)) and x = 1/(2 l_i), reaching out to x = 1, at its own
/// height level inside (0, 1/2).
inline Representation build_threshold_rep(int n_clique, const std::vector<int>& sizes) {
  check_threshold_params(n_clique, sizes);
  const auto r = static_cast<int>(sizes.size());
  std::vector<Box> boxes;
  for (int i = 1; i <= n_clique; ++i)
    boxes.push_back(Box({{Rational(-1, 2 * i), Rational(1, 2 * i)}, {Rational(-i, 2), Rational(i, 2)}}));
  const Rational level(1, 4 * (r + 1));
  for (int i = 1; i <= r; ++i) {
    const int l = sizes[static_cast<std::size_t>(i - 1)];
    const Rational left = (Rational(1, 2 * (l + 1)) + Rational(1, 2 * l)) / 2;
    boxes.push_back(Box({{left, 1}, {(2 * i - 1) * level, 2 * i * level}}));
  }
  Representation rep(2, std::move(boxes));

  for (int i = 1; i <= n_clique; ++i) {
    Point p;
    if (i == n_clique) p = {0, Rational(i, 2)};
    else p = {-(Rational(1, 2 * i) + Rational(1, 2 * (i + 1))) / 2, Rational(i, 2)};
    Rational radius = safe_radius(i, p, rep);
    rep.set_witness(i, {std::move(p), std::move(radius)});
  }
  for (int i = 1; i <= r; ++i) {
    const int v = n_clique + i;
    Point p{1, (4 * i - 1) * level / 2};
    Rational radius = safe_radius(v, p, rep);
    rep.set_witness(v, {std::move(p), std::move(radius)});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Lifts: each inverts one edit operation on a representation
// ---------------------------------------------------------------------------

namespace detail {

inline Representation with_witnesses(const Graph& g, const Representation& rep, const char* what) {
  const auto c1 = verify_c1(g, rep);
  if (!c1.ok) fail(ErrorCode::InvalidInput, std::string(what) + ": input representation violates (c1)");
  const auto c2 = verify_c2(g, rep);
  if (!c2.ok) fail(ErrorCode::InvalidInput, std::string(what) + ": input representation violates (c2)");
  Representation out = rep;
  out.witnesses = c2.witnesses;
  return out;
}

inline Witness lifted(const Witness& w, const std::vector<Rational>& extra) {
  Witness out{w.point, std::min(w.radius, Rational(1, 4))};
  out.point.insert(out.point.end(), extra.begin(), extra.end());
  return out;
}

/// Shifts all boxes so that the largest coordinate is positive, which the
/// enclosing slab box [M_low, 3 M_up]^k needs.
inline Representation ensure_positive_extent(Representation rep) {
  const Rational top = rep.max_coordinate();
  if (top > 0) return rep;
  const Rational shift = 1 - rep.min_coordinate();
  for (auto& b : rep.boxes) {
    auto iv = b.intervals();
    for (auto& i : iv) {
      i.lo += shift;
      i.hi += shift;
    }
    b = Box(std::move(iv));
  }
  for (auto& w : rep.witnesses)
    if (w)
      for (auto& x : w->point) x += shift;
  return rep;
}

inline std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

/// Shared core of vertex and edge re-insertion. `source(w)` gives the label
/// of w's box in `rep`; vertices in `raised` get slab [2,5], others [0,3];
/// `apex` gets [M_low, 3 M_up]^k x [4,6].
template <typename Source>
Representation slab_lift(const Representation& rep_in, int n, int apex, const std::set<int>& raised, Source source,
                         std::vector<std::vector<Interval>>* record) {
  const Representation rep = ensure_positive_extent(rep_in);
  const std::size_t k = rep.dim;
  const Rational m_up = rep.max_coordinate();
  const Rational m_low = rep.min_coordinate();
  std::vector<Box> boxes;
  std::vector<std::optional<Witness>> witnesses;
  for (int w = 1; w <= n; ++w) {
    std::vector<Interval> extra;
    if (w == apex) {
      std::vector<Interval> iv(k, Interval{m_low, 3 * m_up});
      iv.push_back({4, 6});
      boxes.emplace_back(std::move(iv));
      Point p(k, 3 * m_up);
      p.push_back(6);
      witnesses.push_back(Witness{std::move(p), m_up});
      extra = {{4, 6}};
    } else {
      const int s = source(w);
      const bool up = raised.count(w) != 0;
      extra = {up ? Interval{2, 5} : Interval{0, 3}};
      boxes.push_back(rep.box(s).extended(extra));
      witnesses.push_back(lifted(*rep.witness(s), {up ? Rational(2) : Rational(0)}));
    }
    if (record) record->push_back(std::move(extra));
  }
  Representation out(k + 1, std::move(boxes));
  out.witnesses = std::move(witnesses);
  return out;
}

inline Graph delete_vertex(const Graph& g, int v) { return apply_edit(g, make_vertex_delete(g, v)); }

inline Graph delete_edge(const Graph& g, int u, int v) { return apply_edit(g, make_edge_delete(g, u, v)); }

}  // namespace detail

/// Re-inserts vertex v (one extra coordinate). `rep_f` represents g minus v
/// with the labels above v shifted down by one.
inline Representation lift_vertex_add(const Representation& rep_f, const Graph& g, int v, const std::vector<int>& nbrs,
                                      std::vector<std::vector<Interval>>* record = nullptr) {
  if (v < 1 || v > g.n()) fail(ErrorCode::InvalidInput, "no vertex " + std::to_string(v));
  if (detail::sorted_unique(nbrs) != g.neighbors(v)) fail(ErrorCode::BadSnapshot, "neighbour snapshot differs from the graph");
  const Graph f = detail::delete_vertex(g, v);
  const Representation rep = detail::with_witnesses(f, rep_f, "lift_vertex_add");
  const std::set<int> raised(nbrs.begin(), nbrs.end());
  return detail::slab_lift(rep, g.n(), v, raised, [v](int w) { return w < v ? w : w - 1; }, record);
}

/// Re-inserts edge (u, v) (one extra coordinate); v receives the enclosing
/// slab box.
inline Representation lift_edge_add(const Representation& rep_h, const Graph& g, int u, int v,
                                    std::vector<std::vector<Interval>>* record = nullptr) {
  if (!g.adjacent(u, v)) fail(ErrorCode::InvalidInput, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  const Graph h = detail::delete_edge(g, u, v);
  const Representation rep = detail::with_witnesses(h, rep_h, "lift_edge_add");
  std::set<int> raised{u};
  for (int w : h.neighbors(v)) raised.insert(w);
  return detail::slab_lift(rep, g.n(), v, raised, [](int w) { return w; }, record);
}

/// Representation of g minus edge (u, v) in one more coordinate: u and v get
/// the disjoint slabs [1,2] and [3,5], everyone else [0,4].
inline Representation drop_edge(const Representation& rep_g, const Graph& g, int u, int v,
                                std::vector<std::vector<Interval>>* record = nullptr) {
  if (!g.adjacent(u, v)) fail(ErrorCode::InvalidInput, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  const Representation rep = detail::with_witnesses(g, rep_g, "drop_edge");
  std::vector<Box> boxes;
  std::vector<std::optional<Witness>> witnesses;
  for (int w = 1; w <= g.n(); ++w) {
    const Interval slab = w == u ? Interval{1, 2} : (w == v ? Interval{3, 5} : Interval{0, 4});
    boxes.push_back(rep.box(w).extended({slab}));
    witnesses.push_back(detail::lifted(*rep.witness(w), {slab.lo}));
    if (record) record->push_back({slab});
  }
  Representation out(rep.dim + 1, std::move(boxes));
  out.witnesses = std::move(witnesses);
  return out;
}

/// Undoes contracting (u, n) where n = g.n() is the top label (two extra
/// coordinates). `split` is (N(u), N(n)) in g.
inline Representation lift_uncontract(const Representation& rep_ge, const Graph& g, int u, int n_restored,
                                      const std::pair<std::vector<int>, std::vector<int>>& split,
                                      std::vector<std::vector<Interval>>* record = nullptr) {
  const int n = g.n();
  if (n_restored != n) fail(ErrorCode::InvalidInput, "the restored vertex must carry the top label");
  if (!g.adjacent(u, n)) fail(ErrorCode::InvalidInput, "(" + std::to_string(u) + "," + std::to_string(n) + ") is not an edge");
  if (detail::sorted_unique(split.first) != g.neighbors(u) || detail::sorted_unique(split.second) != g.neighbors(n))
    fail(ErrorCode::BadSnapshot, "neighbourhood split inconsistent with the graph");
  const Graph ge = apply_edit(g, make_contract(g, u, n));
  const Representation rep = detail::with_witnesses(ge, rep_ge, "lift_uncontract");

  const std::set<int> nu(split.first.begin(), split.first.end());
  const std::set<int> nn(split.second.begin(), split.second.end());
  std::vector<Box> boxes;
  std::vector<std::optional<Witness>> witnesses;
  for (int i = 1; i <= n; ++i) {
    const int s = (i == n) ? u : i;
    std::vector<Interval> extra;
    std::vector<Rational> at;
    if (i == u) {
      extra = {{0, 6}, {3, 7}};
      at = {0, 3};
    } else if (i == n) {
      extra = {{4, 10}, {6, 10}};
      at = {10, 6};
    } else if (nu.count(i) && !nn.count(i)) {
      extra = {{0, 10}, {0, 5}};
      at = {0, 0};
    } else if (nn.count(i) && !nu.count(i)) {
      extra = {{8, 10}, {0, 10}};
      at = {8, 0};
    } else {
      extra = {{0, 10}, {0, 10}};
      at = {0, 0};
    }
    boxes.push_back(rep.box(s).extended(extra));
    witnesses.push_back(detail::lifted(*rep.witness(s), at));
    if (record) record->push_back(std::move(extra));
  }
  Representation out(rep.dim + 2, std::move(boxes));
  out.witnesses = std::move(witnesses);
  return out;
}

// ---------------------------------------------------------------------------
// Edit-sequence pipeline
// ---------------------------------------------------------------------------

struct TraceStep {
  EditOp op;  // the op being undone
  std::size_t dim_before = 0;
  std::size_t dim_after = 0;
  std::vector<std::vector<Interval>> appended;  // per vertex of the restored graph
};

struct ConstructionTrace {
  std::size_t base_dim = 0;
  std::vector<TraceStep> steps;  // in the order they were applied (last op first)
  Representation final;
};

namespace detail {

inline Representation swap_boxes(Representation rep, int a, int b) {
  std::swap(rep.boxes[a - 1], rep.boxes[b - 1]);
  std::swap(rep.witnesses[a - 1], rep.witnesses[b - 1]);
  return rep;
}

}  // namespace detail

/// Representation of `before` from one of apply_edit(before, op).
inline Representation undo_edit(const Representation& rep, const Graph& before, const EditOp& op,
                                std::vector<std::vector<Interval>>* record = nullptr) {
  switch (op.kind) {
    case EditKind::VertexDelete: return lift_vertex_add(rep, before, op.a, op.nbrs_a, record);
    case EditKind::EdgeDelete: return lift_edge_add(rep, before, op.a, op.b, record);
    case EditKind::Contract: {
      const int top = before.n();
      const Graph swapped = op.swapped ? detail::relabel_swap(before, op.b, top) : before;
      Representation out = lift_uncontract(rep, swapped, op.a, top, {op.nbrs_a, op.nbrs_b}, record);
      if (op.swapped) {
        out = detail::swap_boxes(std::move(out), op.b, top);
        if (record) std::swap((*record)[op.b - 1], (*record)[top - 1]);
      }
      return out;
    }
  }
  fail(ErrorCode::InvalidEdit, "unknown edit kind");
}

/// Undoes `seq` from its base representation back to g. The final dimension
/// is dim(base) + vertex deletions + edge deletions + 2 * contractions.
inline ConstructionTrace build_from_edit_sequence(const Graph& g, const EditSequence& seq, const Representation& base_rep) {
  const std::vector<Graph> chain = replay(g, seq);
  ConstructionTrace trace;
  trace.base_dim = base_rep.dim;
  Representation rep = detail::with_witnesses(chain.back(), base_rep, "base representation");
  for (std::size_t i = seq.ops.size(); i-- > 0;) {
    TraceStep step;
    step.op = seq.ops[i];
    step.dim_before = rep.dim;
    rep = undo_edit(rep, chain[i], seq.ops[i], &step.appended);
    step.dim_after = rep.dim;
    trace.steps.push_back(std::move(step));
  }
  const auto check = verify(g, rep);
  if (!check.ok()) fail(ErrorCode::InvalidInput, "lifted representation failed verification");
  trace.final = std::move(rep);
  return trace;
}

/// Spanning-tree strategy: delete the non-tree edges, represent the tree in
/// the plane and add the edges back. Dimension 2 + (m - n + 1).
inline ConstructionTrace build_via_spanning_tree(const Graph& g) {
  const EditSequence seq = reduce_to_spanning_tree(g);
  return build_from_edit_sequence(g, seq, build_tree_rep(seq.base));
}

// ---------------------------------------------------------------------------
// Brute-force oracle for tiny graphs
// ---------------------------------------------------------------------------

struct OracleResult {
  std::optional<std::size_t> dim;
  std::optional<Representation> rep;
  std::size_t nodes = 0;
};

struct OracleOptions {
  std::size_t node_budget = 50'000'000;
};

namespace detail {

inline bool search_dim(const Graph& g, std::size_t d, const std::vector<Box>& candidates, std::vector<Box>& chosen,
                       std::size_t& nodes, std::size_t budget) {
  const int v = static_cast<int>(chosen.size()) + 1;
  if (v > g.n()) {
    Representation rep(d, chosen);
    return verify(g, rep, {false, {}}).ok();
  }
  for (const Box& cand : candidates) {
    if (++nodes > budget) fail(ErrorCode::TooLarge, "oracle search budget exhausted");
    bool consistent = true;
    for (int u = 1; u < v && consistent; ++u) consistent = intersects(chosen[u - 1], cand) == g.adjacent(u, v);
    if (!consistent) continue;
    chosen.push_back(cand);
    // Coverage only grows as boxes are added, so a vertex whose boundary is
    // already covered can never recover.
    bool alive = true;
    if (chosen.size() >= 2) {
      Representation partial(d, chosen);
      for (int u = 1; u <= v && alive; ++u) alive = !boundary_covered(u, partial);
    }
    if (alive && search_dim(g, d, candidates, chosen, nodes, budget)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace detail

/// Smallest d <= max_dim admitting a strong representation, found by
/// exhaustive search over boxes with integer endpoints in [0, 2n-1].
inline OracleResult brute_force_strong_boxicity(const Graph& g, std::size_t max_dim, OracleOptions options = {}) {
  if (g.n() < 1 || g.n() > 5 || max_dim < 1 || max_dim > 2)
    fail(ErrorCode::TooLarge, "oracle supports 1 <= n <= 5 and max_dim <= 2");
  const int grid = 2 * g.n();
  std::vector<Interval> intervals;
  for (int a = 0; a < grid; ++a)
    for (int b = a + 1; b < grid; ++b) intervals.push_back({a, b});
  OracleResult result;
  for (std::size_t d = 1; d <= max_dim; ++d) {
    std::vector<Box> candidates;
    if (d == 1) {
      for (const auto& iv : intervals) candidates.push_back(Box({iv}));
    } else {
      for (const auto& x : intervals)
        for (const auto& y : intervals) candidates.push_back(Box({x, y}));
    }
    std::vector<Box> chosen;
    if (detail::search_dim(g, d, candidates, chosen, result.nodes, options.node_budget)) {
      Representation rep(d, chosen);
      rep.witnesses = verify_c2(g, rep, {false, {}}).witnesses;
      result.dim = d;
      result.rep = std::move(rep);
      return result;
    }
  }
  return result;
}

}  // namespace minorkit
