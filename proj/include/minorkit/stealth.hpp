#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/coloring.hpp"
#include "minorkit/error.hpp"
#include "minorkit/flow.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/rational.hpp"

namespace minorkit {

/// Target edge set F with the components of G \ F.
struct AttackSpec {
  EdgeSet targets;                             // sorted edge positions
  std::vector<std::vector<int>> components;    // ordered by smallest vertex
  std::vector<int> component_of;               // per vertex (index v), 0-based
  std::vector<std::pair<int, int>> crossings;  // per target: components of (u, v)
  std::size_t k = 0;
};

struct Feasibility {
  bool feasible = false;
  AttackSpec spec;
  // On infeasibility: an F-edge whose endpoints share a component, and a
  // cycle through it (vertex sequence, closing edge implied) using no other
  // F-edge.
  std::optional<EdgePos> violating_edge;
  std::vector<int> witness_cycle;
  EdgeSet witness_edges;
};

inline EdgeSet normalize_edge_set(const Graph& g, EdgeSet edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (EdgePos p : edges)
    if (p >= g.edge_count()) fail(ErrorCode::InvalidInput, "edge position " + std::to_string(p) + " out of range");
  return edges;
}

/// F is stealthily attackable iff every F-edge joins two different
/// components of G \ F (equivalently, no cycle meets F exactly once).
inline Feasibility feasibility(const Graph& g, const EdgeSet& targets) {
  Feasibility out;
  AttackSpec& spec = out.spec;
  spec.targets = normalize_edge_set(g, targets);
  spec.component_of = component_labels(g, spec.targets);
  spec.components = components(g, spec.targets);
  spec.k = spec.components.size();
  for (EdgePos p : spec.targets) {
    const Edge& e = g.edge(p);
    const int cu = spec.component_of[e.u];
    const int cv = spec.component_of[e.v];
    spec.crossings.emplace_back(cu, cv);
    if (cu == cv && !out.violating_edge) {
      out.violating_edge = p;
      out.witness_cycle = find_path(g, e.u, e.v, spec.targets);
      for (std::size_t i = 0; i < out.witness_cycle.size(); ++i)
        out.witness_edges.push_back(*g.find_edge(out.witness_cycle[i], out.witness_cycle[(i + 1) % out.witness_cycle.size()]));
      std::sort(out.witness_edges.begin(), out.witness_edges.end());
    }
  }
  out.feasible = !out.violating_edge.has_value();
  return out;
}

/// Node per component, edge per pair of components joined by an F-edge.
inline Graph component_graph(const AttackSpec& spec) {
  std::set<std::pair<int, int>> pairs;
  for (auto [a, b] : spec.crossings)
    if (a != b) pairs.emplace(std::min(a, b) + 1, std::max(a, b) + 1);
  return Graph::from_pairs(static_cast<int>(spec.k), {pairs.begin(), pairs.end()});
}

/// Flow indices (1-based) that an F-attack vector must hit: the F-edges and
/// every vertex incident to one.
inline std::vector<std::size_t> required_support(const Graph& g, const AttackSpec& spec) {
  std::set<std::size_t> support;
  for (EdgePos p : spec.targets) {
    support.insert(g.flow_index(p));
    support.insert(static_cast<std::size_t>(g.edge(p).u));
    support.insert(static_cast<std::size_t>(g.edge(p).v));
  }
  return {support.begin(), support.end()};
}

inline std::vector<std::size_t> support_of(const RationalVector& a) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s.push_back(i + 1);
  return s;
}

/// a_l(lambda) for a boundary vertex l as exponent -> coefficient.
struct BoundaryPolynomial {
  int vertex = 0;
  std::map<int, Rational> coefficients;

  Rational operator()(const Rational& lambda) const {
    Rational sum = 0;
    for (const auto& [e, c] : coefficients) sum += c * pow(lambda, static_cast<unsigned>(e));
    return sum;
  }
};

inline std::vector<int> vertex_exponents(const AttackSpec& spec, const std::vector<int>& component_exponent) {
  std::vector<int> e(spec.component_of.size(), 0);
  for (std::size_t v = 1; v < e.size(); ++v) e[v] = component_exponent.at(static_cast<std::size_t>(spec.component_of[v]));
  return e;
}

/// a_l = sum_{q ~ l} B_lq (lambda^{e(l)} - lambda^{e(q)}) for every vertex
/// incident to an F-edge, read off the vertex rows of H.
inline std::vector<BoundaryPolynomial> boundary_polynomials(const Graph& g, const AttackSpec& spec, const GainMatrix& h,
                                                            const std::vector<int>& component_exponent) {
  const auto e = vertex_exponents(spec, component_exponent);
  std::vector<BoundaryPolynomial> polys;
  for (std::size_t l : required_support(g, spec)) {
    if (l > h.n) continue;
    BoundaryPolynomial p;
    p.vertex = static_cast<int>(l);
    for (int q : g.neighbors(p.vertex)) {
      const Rational b = -h.at(l - 1, q);
      p.coefficients[e[l]] += b;
      p.coefficients[e[q]] -= b;
    }
    for (auto it = p.coefficients.begin(); it != p.coefficients.end();)
      it = it->second == 0 ? p.coefficients.erase(it) : std::next(it);
    polys.push_back(std::move(p));
  }
  return polys;
}

struct StealthAttack {
  RationalVector s;                  // stealth vector, length n
  Rational lambda;
  std::vector<int> exponents;        // per component
  RationalVector a;                  // attack vector H s, length t
  std::vector<std::size_t> support;  // 1-based flow indices
  std::vector<Rational> rejected;    // lambdas that hit a root
};

namespace detail {

inline void require_feasible_spec(const Graph& g, const AttackSpec& spec) {
  if (spec.component_of.size() != static_cast<std::size_t>(g.n()) + 1) fail(ErrorCode::InvalidInput, "spec built for another graph");
  for (auto [a, b] : spec.crossings)
    if (a == b) fail(ErrorCode::InfeasibleSpec, "an F-edge lies inside one component");
}

inline void require_proper(const AttackSpec& spec, const std::vector<int>& exponents) {
  if (exponents.size() != spec.k) fail(ErrorCode::ImproperColoring, "need one exponent per component");
  for (auto [a, b] : spec.crossings)
    if (exponents[a] == exponents[b]) fail(ErrorCode::ImproperColoring, "components joined by an F-edge share an exponent");
}

inline std::uint64_t next_prime(std::uint64_t p) {
  for (std::uint64_t c = p + 1;; ++c) {
    bool prime = c >= 2;
    for (std::uint64_t d = 2; d * d <= c && prime; ++d) prime = c % d != 0;
    if (prime) return c;
  }
}

inline RationalVector power_vector(const AttackSpec& spec, const std::vector<int>& exponents, const Rational& lambda) {
  const auto e = vertex_exponents(spec, exponents);
  RationalVector s;
  for (std::size_t v = 1; v < e.size(); ++v) s.push_back(pow(lambda, static_cast<unsigned>(e[v])));
  return s;
}

}  // namespace detail

/// True iff lambda is a root of some boundary polynomial.
inline bool hits_root(const std::vector<BoundaryPolynomial>& polys, const Rational& lambda) {
  return std::any_of(polys.begin(), polys.end(), [&](const BoundaryPolynomial& p) { return p(lambda) == 0; });
}

/// s_v = lambda^{exponent of v's component}. lambda starts at the hint and
/// is multiplied by (1 - 1/p) over successive primes p while it is a root of
/// some boundary polynomial.
inline StealthAttack build_stealth_with_exponents(const Graph& g, const AttackSpec& spec, const GainMatrix& h,
                                                  const std::vector<int>& exponents, const Rational& lambda_hint) {
  detail::require_feasible_spec(g, spec);
  detail::require_proper(spec, exponents);
  if (lambda_hint <= 0 || lambda_hint > 1) fail(ErrorCode::InvalidInput, "lambda hint must lie in (0, 1]");
  const auto polys = boundary_polynomials(g, spec, h, exponents);
  StealthAttack out;
  out.exponents = exponents;
  out.lambda = lambda_hint;
  std::uint64_t p = 1;
  while (hits_root(polys, out.lambda)) {
    out.rejected.push_back(out.lambda);
    p = detail::next_prime(p);
    out.lambda *= Rational(static_cast<long long>(p - 1), static_cast<long long>(p));
  }
  out.s = detail::power_vector(spec, exponents, out.lambda);
  out.a = flows(h, out.s);
  out.support = support_of(out.a);
  if (out.support != required_support(g, spec)) fail(ErrorCode::InfeasibleSpec, "attack vector support differs from the F-attack pattern");
  return out;
}

inline std::vector<int> identity_exponents(const AttackSpec& spec) {
  std::vector<int> e(spec.k);
  for (std::size_t i = 0; i < spec.k; ++i) e[i] = static_cast<int>(i);
  return e;
}

inline StealthAttack build_stealth(const Graph& g, const AttackSpec& spec, const GainMatrix& h, const Rational& lambda_hint) {
  return build_stealth_with_exponents(g, spec, h, identity_exponents(spec), lambda_hint);
}

/// Colour j of a component becomes exponent j - 1.
inline std::vector<int> color_exponents(const AttackSpec& spec, const Coloring& coloring) {
  if (coloring.colors.size() != spec.k) fail(ErrorCode::ImproperColoring, "colouring size differs from component count");
  if (!is_proper(component_graph(spec), coloring.colors)) fail(ErrorCode::ImproperColoring, "colouring is not proper");
  std::vector<int> e;
  for (int c : coloring.colors) e.push_back(c - 1);
  return e;
}

inline StealthAttack build_stealth_colored(const Graph& g, const AttackSpec& spec, const GainMatrix& h, const Coloring& coloring,
                                           const Rational& lambda_hint) {
  return build_stealth_with_exponents(g, spec, h, color_exponents(spec, coloring), lambda_hint);
}

/// max over F of |s_i - s_j| divided by the min over F.
inline Rational variation_ratio(const Graph& g, const RationalVector& s, const EdgeSet& targets) {
  if (targets.empty()) fail(ErrorCode::EmptyF, "variation ratio needs a non-empty target set");
  std::optional<Rational> hi, lo;
  for (EdgePos p : targets) {
    const Edge& e = g.edge(p);
    const Rational d = abs(s.at(static_cast<std::size_t>(e.u - 1)) - s.at(static_cast<std::size_t>(e.v - 1)));
    if (d == 0) fail(ErrorCode::InvalidInput, "stealth vector does not separate an F-edge");
    if (!hi || d > *hi) hi = d;
    if (!lo || d < *lo) lo = d;
  }
  return *hi / *lo;
}

/// (1 - lambda^{c-1}) / (lambda^{c-2} (1 - lambda)): the ratio of the power
/// construction when F joins both the extreme and the two top levels.
inline Rational power_ratio_bound(int levels, const Rational& lambda) {
  if (levels < 2) fail(ErrorCode::InvalidInput, "need at least two levels");
  return (1 - pow(lambda, static_cast<unsigned>(levels - 1))) /
         (pow(lambda, static_cast<unsigned>(levels - 2)) * (1 - lambda));
}

inline int distinct_levels(const std::vector<int>& exponents) {
  return static_cast<int>(std::set<int>(exponents.begin(), exponents.end()).size());
}

/// Limit of the variation ratio as lambda -> 1: the largest exponent gap
/// across F over the smallest one.
inline Rational limit_ratio(const AttackSpec& spec, const std::vector<int>& exponents) {
  if (spec.crossings.empty()) fail(ErrorCode::EmptyF, "no F-edges");
  int hi = 0, lo = -1;
  for (auto [a, b] : spec.crossings) {
    const int gap = std::abs(exponents[a] - exponents[b]);
    hi = std::max(hi, gap);
    lo = lo < 0 ? gap : std::min(lo, gap);
  }
  return Rational(hi, lo);
}

struct ScheduleStep {
  Rational lambda;
  Rational ratio;
};

struct ScheduleResult {
  StealthAttack attack;  // at the last lambda
  Rational ratio;
  Rational limit;        // exact lambda -> 1 limit of the ratio
  int levels = 0;        // distinct exponents c; limit <= c - 1
  std::vector<ScheduleStep> history;
};

/// Walks lambda_q = 1 - 1/(q+1), skipping roots, until the ratio is within
/// `gap` of its lambda -> 1 limit.
inline ScheduleResult variation_limit_schedule(const Graph& g, const AttackSpec& spec, const GainMatrix& h,
                                               const std::vector<int>& exponents, const Rational& gap,
                                               std::size_t max_steps = 1'000'000) {
  detail::require_feasible_spec(g, spec);
  detail::require_proper(spec, exponents);
  if (gap <= 0) fail(ErrorCode::InvalidInput, "gap must be positive");
  const auto polys = boundary_polynomials(g, spec, h, exponents);
  ScheduleResult out;
  out.levels = distinct_levels(exponents);
  out.limit = limit_ratio(spec, exponents);
  for (std::size_t q = 1; q <= max_steps; ++q) {
    const Rational lambda = 1 - Rational(1, static_cast<long long>(q + 1));
    if (hits_root(polys, lambda)) continue;
    const RationalVector s = detail::power_vector(spec, exponents, lambda);
    const Rational ratio = variation_ratio(g, s, spec.targets);
    out.history.push_back({lambda, ratio});
    if (abs(ratio - out.limit) <= gap) {
      out.attack = build_stealth_with_exponents(g, spec, h, exponents, lambda);
      out.ratio = ratio;
      return out;
    }
  }
  fail(ErrorCode::BudgetExceeded, "schedule did not converge");
}

// ---------------------------------------------------------------------------
// Partial knowledge: gains only known to lie in [eps1, eps2]
// ---------------------------------------------------------------------------

/// Exact minimum of |a_l| over every gain assignment in [eps1, eps2]^E,
/// taken over all vertices incident to an F-edge. a_l is linear in the
/// gains, so its range is an interval computed coefficient by coefficient.
inline Rational robust_worst_case(const Graph& g, const AttackSpec& spec, const std::vector<int>& exponents,
                                  const Rational& lambda, const Rational& eps1, const Rational& eps2) {
  const auto e = vertex_exponents(spec, exponents);
  std::optional<Rational> worst;
  for (std::size_t l : required_support(g, spec)) {
    if (l > static_cast<std::size_t>(g.n())) continue;
    Rational lo = 0, hi = 0;
    for (int q : g.neighbors(static_cast<int>(l))) {
      const Rational coef = pow(lambda, static_cast<unsigned>(e[l])) - pow(lambda, static_cast<unsigned>(e[q]));
      lo += coef > 0 ? coef * eps1 : coef * eps2;
      hi += coef > 0 ? coef * eps2 : coef * eps1;
    }
    const Rational m = (lo <= 0 && hi >= 0) ? Rational(0) : std::min(abs(lo), abs(hi));
    if (!worst || m < *worst) worst = m;
  }
  return worst.value_or(Rational(0));
}

struct RobustAttack {
  RationalVector s;
  Rational lambda;            // value used in s
  Rational lambda_threshold;  // max(2, ceil(2 k eps2 / eps1) + 1)
  bool raised = false;        // lambda had to exceed the threshold
  Rational worst_case;        // exact min |a_l| over all admissible gains
  std::vector<int> exponents;
};

/// Stealth vector that works for every gain matrix with gains in
/// [eps1, eps2]: lambda^{i-1} with lambda > 1 large enough that every
/// boundary entry keeps |a_l| >= eps1 / 2.
inline RobustAttack build_robust_stealth(const Graph& g, const AttackSpec& spec, const Rational& eps1, const Rational& eps2) {
  detail::require_feasible_spec(g, spec);
  if (eps1 <= 0 || eps2 < eps1) fail(ErrorCode::BadBounds, "need 0 < eps1 <= eps2");
  RobustAttack out;
  out.exponents = identity_exponents(spec);
  out.lambda_threshold =
      std::max(Rational(2), ceil_div_positive(2 * Rational(static_cast<long long>(spec.k)) * eps2 / eps1) + 1);
  out.lambda = out.lambda_threshold;
  // The closed form assumes at most one F-edge from a vertex into each
  // component; a vertex with many F-edges into lower levels can need more.
  const Rational target = eps1 / 2;
  for (;;) {
    out.worst_case = robust_worst_case(g, spec, out.exponents, out.lambda, eps1, eps2);
    if (spec.targets.empty() || out.worst_case >= target) break;
    out.lambda += 1;
    out.raised = true;
  }
  out.s = detail::power_vector(spec, out.exponents, out.lambda);
  return out;
}

struct RobustAudit {
  std::size_t samples = 0;
  std::size_t boundary_failures = 0;  // |a_l| < eps1/2 on a required entry
  std::size_t support_failures = 0;   // a non-required entry is non-zero
  Rational min_boundary;
};

/// Samples gain vectors uniformly from a rational grid on [eps1, eps2] and
/// checks the attack pattern on each.
inline RobustAudit audit_robust(const Graph& g, const AttackSpec& spec, const RationalVector& s, const Rational& eps1,
                                const Rational& eps2, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> step(0, 1000);
  const auto required = required_support(g, spec);
  const std::set<std::size_t> req(required.begin(), required.end());
  RobustAudit audit;
  audit.samples = samples;
  std::optional<Rational> lowest;
  for (std::size_t i = 0; i < samples; ++i) {
    RationalVector gains;
    for (std::size_t e = 0; e < g.edge_count(); ++e) gains.push_back(eps1 + (eps2 - eps1) * Rational(step(rng), 1000));
    const GainMatrix h = assemble_gain_matrix(g.with_gains(gains));
    const RationalVector a = flows(h, s);
    for (std::size_t idx = 1; idx <= a.size(); ++idx) {
      const Rational& x = a[idx - 1];
      if (!req.count(idx)) {
        if (x != 0) ++audit.support_failures;
        continue;
      }
      if (idx <= h.n) {
        if (abs(x) < eps1 / 2) ++audit.boundary_failures;
        if (!lowest || abs(x) < *lowest) lowest = abs(x);
      } else if (x == 0) {
        ++audit.support_failures;
      }
    }
  }
  audit.min_boundary = lowest.value_or(Rational(0));
  return audit;
}

// ---------------------------------------------------------------------------
// Edge variation factor oracle
// ---------------------------------------------------------------------------

struct ThetaEstimate {
  Rational best;                 // smallest ratio found (upper bound on theta)
  std::vector<long long> values; // component values achieving it
};

/// Grid search over component values c_1..c_k in {0..grid} (minimum 0):
/// every F-edge difference and every boundary entry must be non-zero.
/// Returns the best max/min ratio of F-edge differences.
inline ThetaEstimate theta_oracle(const Graph& g, const AttackSpec& spec, const GainMatrix& h, int grid = 40) {
  detail::require_feasible_spec(g, spec);
  if (spec.k > 5) fail(ErrorCode::TooLarge, "theta oracle supports at most 5 components");
  if (spec.targets.empty()) fail(ErrorCode::EmptyF, "no F-edges");
  if (grid < 2) fail(ErrorCode::InvalidInput, "grid must be at least 2");

  // Integer gains: scale every gain by the lcm of the denominators.
  BigInt scale = 1;
  for (EdgePos p = 0; p < g.edge_count(); ++p) {
    const BigInt den = boost::multiprecision::denominator(h.gain(p));
    scale = scale / boost::multiprecision::gcd(scale, den) * den;
  }
  struct Term {
    int comp;
    long long gain;
  };
  struct Row {
    int comp;
    std::vector<Term> terms;
  };
  std::vector<Row> rows;
  for (std::size_t l : required_support(g, spec)) {
    if (l > h.n) continue;
    Row row{spec.component_of[l], {}};
    for (int q : g.neighbors(static_cast<int>(l))) {
      if (spec.component_of[q] == row.comp) continue;
      const Rational scaled = -h.at(l - 1, q) * Rational(scale);
      const BigInt num = boost::multiprecision::numerator(scaled);
      if (num > BigInt(1) << 40) fail(ErrorCode::TooLarge, "gains too large for the oracle");
      row.terms.push_back({spec.component_of[q], num.convert_to<long long>()});
    }
    rows.push_back(std::move(row));
  }
  std::set<std::pair<int, int>> pairs;
  for (auto [a, b] : spec.crossings) pairs.emplace(std::min(a, b), std::max(a, b));

  const std::size_t k = spec.k;
  std::vector<long long> c(k, 0);
  std::optional<std::pair<long long, long long>> best;  // (max, min)
  std::vector<long long> best_values;
  for (;;) {
    if (*std::min_element(c.begin(), c.end()) == 0) {
      long long hi = 0, lo = -1;
      bool ok = true;
      for (auto [a, b] : pairs) {
        const long long d = std::llabs(c[a] - c[b]);
        if (d == 0) { ok = false; break; }
        hi = std::max(hi, d);
        lo = lo < 0 ? d : std::min(lo, d);
      }
      if (ok && (!best || static_cast<__int128>(hi) * best->second < static_cast<__int128>(best->first) * lo)) {
        for (const Row& row : rows) {
          __int128 sum = 0;
          for (const Term& t : row.terms) sum += static_cast<__int128>(t.gain) * (c[row.comp] - c[t.comp]);
          if (sum == 0) { ok = false; break; }
        }
        if (ok) {
          best = {hi, lo};
          best_values = c;
        }
      }
    }
    std::size_t i = 0;
    while (i < k && c[i] == grid) c[i++] = 0;
    if (i == k) break;
    ++c[i];
  }
  if (!best) fail(ErrorCode::NotFound, "no admissible stealth vector on the grid");
  return {Rational(best->first, best->second), best_values};
}

}  // namespace minorkit
