#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/minorkit.hpp"

namespace testkit {

using namespace minorkit;

inline std::uint64_t seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("MINORKIT_SEED")) return std::strtoull(env, nullptr, 10);
  return fallback;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Uniform random labelled tree via a random Pruefer-like attachment.
inline Graph random_tree(std::mt19937_64& rng, int n) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i < n; ++i) pairs.emplace_back(order[static_cast<std::size_t>(uniform(rng, 0, i - 1))], order[static_cast<std::size_t>(i)]);
  return Graph::from_pairs(n, pairs);
}

/// Connected graph with n - 1 + extra edges (extra capped by the complete graph).
inline Graph random_connected(std::mt19937_64& rng, int n, int extra) {
  const Graph tree = random_tree(rng, n);
  std::set<std::pair<int, int>> have;
  for (auto [u, v] : tree.edge_pairs()) have.emplace(u, v);
  std::vector<std::pair<int, int>> missing;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!have.count({u, v})) missing.emplace_back(u, v);
  std::shuffle(missing.begin(), missing.end(), rng);
  for (int i = 0; i < extra && i < static_cast<int>(missing.size()); ++i) have.insert(missing[static_cast<std::size_t>(i)]);
  std::vector<std::pair<int, int>> pairs(have.begin(), have.end());
  std::shuffle(pairs.begin(), pairs.end(), rng);
  return Graph::from_pairs(n, pairs);
}

/// Rational gains p/q with p in [1, 9], q in [1, 4].
inline Graph with_random_gains(std::mt19937_64& rng, const Graph& g) {
  std::vector<Rational> gains;
  for (std::size_t i = 0; i < g.edge_count(); ++i) gains.emplace_back(uniform(rng, 1, 9), uniform(rng, 1, 4));
  return g.with_gains(gains);
}

inline Graph unit_gains(const Graph& g) { return g.with_gains(std::vector<Rational>(g.edge_count(), Rational(1))); }

/// F chosen as every edge crossing a random partition of the vertices into
/// up to `parts` connected blocks, so G \ F has the blocks as components
/// whenever each block stays connected.
inline EdgeSet random_cut(std::mt19937_64& rng, const Graph& g, int parts) {
  std::vector<int> block(static_cast<std::size_t>(g.n()) + 1, -1);
  std::vector<int> seeds(static_cast<std::size_t>(g.n()));
  std::iota(seeds.begin(), seeds.end(), 1);
  std::shuffle(seeds.begin(), seeds.end(), rng);
  parts = std::min(parts, g.n());
  std::vector<std::vector<int>> grow(static_cast<std::size_t>(parts));
  for (int b = 0; b < parts; ++b) {
    block[seeds[static_cast<std::size_t>(b)]] = b;
    grow[static_cast<std::size_t>(b)].push_back(seeds[static_cast<std::size_t>(b)]);
  }
  // Random multi-source growth keeps each block connected.
  for (bool progress = true; progress;) {
    progress = false;
    std::vector<int> bs(static_cast<std::size_t>(parts));
    std::iota(bs.begin(), bs.end(), 0);
    std::shuffle(bs.begin(), bs.end(), rng);
    for (int b : bs) {
      std::vector<int> options;
      for (int v : grow[static_cast<std::size_t>(b)])
        for (int w : g.neighbors(v))
          if (block[w] < 0) options.push_back(w);
      if (options.empty()) continue;
      const int w = options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))];
      block[w] = b;
      grow[static_cast<std::size_t>(b)].push_back(w);
      progress = true;
    }
  }
  EdgeSet f;
  for (EdgePos p = 0; p < g.edge_count(); ++p)
    if (block[g.edge(p).u] != block[g.edge(p).v]) f.push_back(p);
  return f;
}

inline std::vector<EdgeSet> all_subsets_up_to(std::size_t m, std::size_t max_size) {
  std::vector<EdgeSet> out;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_size) continue;
    EdgeSet s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  return out;
}

/// Oracle for stealth feasibility: no simple cycle meets F exactly once.
inline bool cycle_oracle_feasible(const Graph& g, const EdgeSet& f, const std::vector<EdgeSet>& cycles) {
  const std::set<EdgePos> fs(f.begin(), f.end());
  for (const auto& c : cycles) {
    int hits = 0;
    for (EdgePos p : c) hits += fs.count(p) ? 1 : 0;
    if (hits == 1) return false;
  }
  (void)g;
  return true;
}

}  // namespace testkit
