#pragma once

#include <cstddef>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/rational.hpp"

namespace minorkit {

/// t x n gain matrix. Rows 0..n-1 are the vertex net-flow rows, rows
/// n..t-1 the edge rows in edge-list order. Edge rows carry +gain at the
/// smaller endpoint and -gain at the larger one.
struct GainMatrix {
  std::size_t n = 0;
  std::size_t t = 0;
  std::vector<RationalVector> rows;
  std::vector<std::pair<int, int>> edge_ends;  // (smaller, larger) per edge row

  const Rational& at(std::size_t row, int vertex) const { return rows[row][static_cast<std::size_t>(vertex - 1)]; }
  Rational gain(EdgePos pos) const { return rows[n + pos][static_cast<std::size_t>(edge_ends[pos].first - 1)]; }
};

using StateVector = RationalVector;
using FlowVector = RationalVector;

inline GainMatrix assemble_gain_matrix(const Graph& g) {
  if (!g.has_all_gains()) fail(ErrorCode::MissingGain, "every edge needs a gain");
  GainMatrix h;
  h.n = static_cast<std::size_t>(g.n());
  h.t = h.n + g.edge_count();
  h.rows.assign(h.t, RationalVector(h.n, Rational(0)));
  for (EdgePos pos = 0; pos < g.edge_count(); ++pos) {
    const Edge& e = g.edge(pos);
    const Rational& b = *e.gain;
    const auto i = static_cast<std::size_t>(e.u - 1);
    const auto j = static_cast<std::size_t>(e.v - 1);
    auto& row = h.rows[h.n + pos];
    row[i] = b;
    row[j] = -b;
    h.rows[i][i] += b;
    h.rows[i][j] -= b;
    h.rows[j][j] += b;
    h.rows[j][i] -= b;
    h.edge_ends.emplace_back(e.u, e.v);
  }
  return h;
}

inline FlowVector flows(const GainMatrix& h, const StateVector& x) {
  if (x.size() != h.n) fail(ErrorCode::DimensionMismatch, "state has " + std::to_string(x.size()) + " entries, matrix has " + std::to_string(h.n) + " columns");
  FlowVector z(h.t, Rational(0));
  for (std::size_t r = 0; r < h.t; ++r)
    for (std::size_t c = 0; c < h.n; ++c)
      if (h.rows[r][c] != 0) z[r] += h.rows[r][c] * x[c];
  return z;
}

/// Differential state calculation: pins x_1 = x1_ref, walks a BFS tree
/// from vertex 1 using the edge rows (z_f / B = x_i - x_j), then checks that
/// every row of H x reproduces z exactly.
inline StateVector recover_states(const GainMatrix& h, const FlowVector& z, const Graph& g, const Rational& x1_ref) {
  if (z.size() != h.t) fail(ErrorCode::DimensionMismatch, "flow vector length differs from matrix rows");
  if (static_cast<std::size_t>(g.n()) != h.n || g.edge_count() + h.n != h.t)
    fail(ErrorCode::DimensionMismatch, "graph does not match the gain matrix");
  if (g.n() == 0) return {};
  if (!is_connected(g)) fail(ErrorCode::Disconnected, "state recovery needs a connected graph");

  StateVector x(h.n);
  std::vector<bool> known(h.n + 1, false);
  x[0] = x1_ref;
  known[1] = true;
  std::queue<int> frontier;
  frontier.push(1);
  while (!frontier.empty()) {
    const int a = frontier.front();
    frontier.pop();
    for (int b : g.neighbors(a)) {
      if (known[b]) continue;
      const EdgePos pos = *g.find_edge(a, b);
      const auto [lo, hi] = h.edge_ends[pos];
      const Rational diff = z[h.n + pos] / h.gain(pos);  // x_lo - x_hi
      x[b - 1] = (b == hi) ? Rational(x[a - 1] - diff) : Rational(x[a - 1] + diff);
      known[b] = true;
      frontier.push(b);
    }
  }
  const FlowVector check = flows(h, x);
  for (std::size_t r = 0; r < h.t; ++r) {
    if (check[r] != z[r]) {
      const std::string what = r < h.n ? "vertex row " + std::to_string(r + 1)
                                       : "edge row " + std::to_string(r + 1) + " (" + std::to_string(h.edge_ends[r - h.n].first) + "," +
                                             std::to_string(h.edge_ends[r - h.n].second) + ")";
      fail(ErrorCode::Inconsistent, "flows disagree with every state vector at " + what);
    }
  }
  return x;
}

/// Per-edge differences x_i - x_j (i the smaller endpoint) implied by the
/// edge rows of z.
inline RationalVector edge_differences(const GainMatrix& h, const FlowVector& z) {
  RationalVector d;
  d.reserve(h.t - h.n);
  for (EdgePos pos = 0; pos < h.t - h.n; ++pos) d.push_back(z[h.n + pos] / h.gain(pos));
  return d;
}

}  // namespace minorkit
