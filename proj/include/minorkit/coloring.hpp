#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

struct Coloring {
  std::vector<int> colors;  // colors[v-1] in 1..count
  int count = 0;
  bool exact = false;  // count is the chromatic number
};

inline bool is_proper(const Graph& g, const std::vector<int>& colors) {
  if (colors.size() != static_cast<std::size_t>(g.n())) return false;
  for (const Edge& e : g.edges())
    if (colors[e.u - 1] == colors[e.v - 1]) return false;
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 1; });
}

namespace detail {

inline bool color_with(const Graph& g, const std::vector<int>& order, std::size_t at, int limit, std::vector<int>& colors) {
  if (at == order.size()) return true;
  const int v = order[at];
  // Symmetry breaking: never open more than one new colour at a time.
  int used = 0;
  for (std::size_t i = 0; i < at; ++i) used = std::max(used, colors[order[i] - 1]);
  for (int c = 1; c <= std::min(limit, used + 1); ++c) {
    bool clash = false;
    for (int w : g.neighbors(v))
      if (colors[w - 1] == c) { clash = true; break; }
    if (clash) continue;
    colors[v - 1] = c;
    if (color_with(g, order, at + 1, limit, colors)) return true;
    colors[v - 1] = 0;
  }
  return false;
}

/// Smallest-last order (reverse of repeatedly removing a min-degree vertex).
inline std::vector<int> degeneracy_order(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()) + 1);
  std::vector<bool> gone(static_cast<std::size_t>(g.n()) + 1, false);
  for (int v = 1; v <= g.n(); ++v) deg[v] = static_cast<int>(g.degree(v));
  std::vector<int> removal;
  for (int step = 0; step < g.n(); ++step) {
    int best = 0;
    for (int v = 1; v <= g.n(); ++v)
      if (!gone[v] && (best == 0 || deg[v] < deg[best])) best = v;
    gone[best] = true;
    removal.push_back(best);
    for (int w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

}  // namespace detail

/// Proper colouring; exact chromatic number by backtracking up to
/// `exact_limit` vertices, greedy over a degeneracy order beyond that.
inline Coloring color_assignment(const Graph& g, int exact_limit = 12) {
  Coloring result;
  result.colors.assign(static_cast<std::size_t>(g.n()), 0);
  if (g.n() == 0) {
    result.exact = true;
    return result;
  }
  const auto order = detail::degeneracy_order(g);
  if (g.n() <= exact_limit) {
    for (int limit = 1; limit <= g.n(); ++limit) {
      std::fill(result.colors.begin(), result.colors.end(), 0);
      if (detail::color_with(g, order, 0, limit, result.colors)) {
        result.count = limit;
        result.exact = true;
        return result;
      }
    }
  }
  for (int v : order) {
    std::vector<bool> taken(static_cast<std::size_t>(g.n()) + 2, false);
    for (int w : g.neighbors(v)) taken[result.colors[w - 1]] = true;
    int c = 1;
    while (taken[c]) ++c;
    result.colors[v - 1] = c;
    result.count = std::max(result.count, c);
  }
  return result;
}

}  // namespace minorkit
