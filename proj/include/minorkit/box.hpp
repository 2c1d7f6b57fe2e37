#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorkit/error.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/rational.hpp"

namespace minorkit {

struct Interval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
  bool meets(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

using Point = std::vector<Rational>;

/// Closed axis-aligned box, one interval per coordinate.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (const auto& iv : intervals_)
      if (iv.lo > iv.hi) fail(ErrorCode::InvalidInput, "box interval with lo > hi");
  }

  std::size_t dim() const { return intervals_.size(); }
  const Interval& operator[](std::size_t axis) const { return intervals_[axis]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  /// Cube of side `side` centred at `center`.
  static Box cube(const Point& center, const Rational& side) {
    std::vector<Interval> iv;
    iv.reserve(center.size());
    const Rational half = side / 2;
    for (const auto& c : center) iv.push_back({c - half, c + half});
    return Box(std::move(iv));
  }

  /// This box times `extra` (appended coordinates).
  Box extended(const std::vector<Interval>& extra) const {
    auto iv = intervals_;
    iv.insert(iv.end(), extra.begin(), extra.end());
    return Box(std::move(iv));
  }

  bool contains(const Point& p) const {
    if (p.size() != dim()) fail(ErrorCode::DimensionMismatch, "point/box dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
      if (!intervals_[i].contains(p[i])) return false;
    return true;
  }

  bool contains(const Box& other) const {
    for (std::size_t i = 0; i < dim(); ++i)
      if (!intervals_[i].contains(other[i])) return false;
    return true;
  }

  /// Point lies in the box and on at least one of its facets.
  bool on_boundary(const Point& p) const {
    if (!contains(p)) return false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (p[i] == intervals_[i].lo || p[i] == intervals_[i].hi) return true;
    return false;
  }

  bool thick() const {
    return std::all_of(intervals_.begin(), intervals_.end(), [](const Interval& iv) { return iv.lo < iv.hi; });
  }

  friend bool operator==(const Box&, const Box&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Closed boxes meet iff every coordinate interval overlaps; touching counts.
inline bool intersects(const Box& a, const Box& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "box dimensions differ");
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a[i].meets(b[i])) return false;
  return true;
}

/// L-infinity distance from a point to a closed box (0 inside).
inline Rational linf_distance(const Point& p, const Box& box) {
  Rational best = 0;
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (box[i].lo > p[i]) best = std::max(best, Rational(box[i].lo - p[i]));
    if (p[i] > box[i].hi) best = std::max(best, Rational(p[i] - box[i].hi));
  }
  return best;
}

/// Exclusive boundary point x_v with cube side a_v.
struct Witness {
  Point point;
  Rational radius;
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Boxes for vertices 1..n (stored at index v-1) plus optional witnesses.
struct Representation {
  std::size_t dim = 0;
  std::vector<Box> boxes;
  std::vector<std::optional<Witness>> witnesses;

  Representation() = default;
  Representation(std::size_t d, std::vector<Box> b) : dim(d), boxes(std::move(b)), witnesses(boxes.size()) { validate(); }

  int vertex_count() const { return static_cast<int>(boxes.size()); }
  const Box& box(int v) const { return boxes.at(static_cast<std::size_t>(v - 1)); }
  const std::optional<Witness>& witness(int v) const { return witnesses.at(static_cast<std::size_t>(v - 1)); }
  void set_witness(int v, Witness w) { witnesses.at(static_cast<std::size_t>(v - 1)) = std::move(w); }

  void validate() const {
    if (witnesses.size() != boxes.size()) fail(ErrorCode::InvalidInput, "witness table size differs from box count");
    for (const auto& b : boxes) {
      if (b.dim() != dim) fail(ErrorCode::DimensionMismatch, "box of dimension " + std::to_string(b.dim()) + " in a " + std::to_string(dim) + "-dimensional representation");
      if (!b.thick()) fail(ErrorCode::InvalidInput, "representation boxes need positive thickness in every coordinate");
    }
    for (const auto& w : witnesses)
      if (w && w->point.size() != dim) fail(ErrorCode::DimensionMismatch, "witness point dimension mismatch");
  }

  /// Largest upper endpoint / smallest lower endpoint over all boxes.
  Rational max_coordinate() const {
    Rational m = boxes.at(0)[0].hi;
    for (const auto& b : boxes)
      for (const auto& iv : b.intervals()) m = std::max(m, iv.hi);
    return m;
  }
  Rational min_coordinate() const {
    Rational m = boxes.at(0)[0].lo;
    for (const auto& b : boxes)
      for (const auto& iv : b.intervals()) m = std::min(m, iv.lo);
    return m;
  }
};

namespace detail {
inline void require_same_vertices(const Graph& g, const Representation& rep) {
  if (rep.vertex_count() != g.n())
    fail(ErrorCode::VertexMismatch, "representation has " + std::to_string(rep.vertex_count()) +
                                        " boxes but the graph has " + std::to_string(g.n()) + " vertices");
}
}  // namespace detail

struct C1Result {
  bool ok = true;
  std::vector<std::pair<int, int>> violations;  // i < j with intersection != adjacency
};

inline C1Result verify_c1(const Graph& g, const Representation& rep) {
  detail::require_same_vertices(g, rep);
  C1Result result;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (intersects(rep.box(i), rep.box(j)) != g.adjacent(i, j)) result.violations.emplace_back(i, j);
  result.ok = result.violations.empty();
  return result;
}

/// Cube B_d(x_v, a_v) must avoid every other box and x_v must sit on the
/// boundary of box v.
inline bool check_witness(int v, const Representation& rep) {
  const auto& w = rep.witness(v);
  if (!w) fail(ErrorCode::MissingWitness, "no witness stored for vertex " + std::to_string(v));
  if (w->radius <= 0 || w->point.size() != rep.dim) return false;
  if (!rep.box(v).on_boundary(w->point)) return false;
  const Box cube = Box::cube(w->point, w->radius);
  for (int u = 1; u <= rep.vertex_count(); ++u)
    if (u != v && intersects(cube, rep.box(u))) return false;
  return true;
}

struct CoverageOptions {
  /// Upper bound on visited subdivision cells per vertex.
  std::size_t node_budget = 2'000'000;
};

namespace detail {

// Restricted boxes live in the coordinates of the facet (one axis dropped).
inline std::optional<std::vector<Rational>> uncovered_in_region(std::vector<Interval> region,
                                                                const std::vector<std::vector<Interval>>& covers,
                                                                std::size_t& budget) {
  if (budget == 0) fail(ErrorCode::BudgetExceeded, "coverage subdivision budget exhausted");
  --budget;
  const std::size_t dims = region.size();
  // Only boxes with positive-volume overlap can cover an open part of the
  // region; the union is closed, so covering a dense subset suffices.
  std::vector<std::vector<Interval>> live;
  for (const auto& c : covers) {
    bool overlap = true;
    for (std::size_t i = 0; i < dims && overlap; ++i)
      overlap = std::max(c[i].lo, region[i].lo) < std::min(c[i].hi, region[i].hi);
    if (!overlap) continue;
    bool whole = true;
    for (std::size_t i = 0; i < dims && whole; ++i) whole = c[i].contains(region[i]);
    if (whole) return std::nullopt;
    live.push_back(c);
  }
  if (live.empty()) {
    std::vector<Rational> center;
    center.reserve(dims);
    for (const auto& iv : region) center.push_back((iv.lo + iv.hi) / 2);
    return center;
  }
  // Split the region at an endpoint of the first live box that cuts it.
  const auto& cut = live.front();
  for (std::size_t i = 0; i < dims; ++i) {
    Rational at;
    if (cut[i].lo > region[i].lo) at = cut[i].lo;
    else if (cut[i].hi < region[i].hi) at = cut[i].hi;
    else continue;
    auto left = region;
    auto right = region;
    left[i].hi = at;
    right[i].lo = at;
    if (auto p = uncovered_in_region(std::move(left), live, budget)) return p;
    return uncovered_in_region(std::move(right), live, budget);
  }
  return std::nullopt;  // unreachable: a live box not containing region cuts it
}

}  // namespace detail

/// A point of the boundary of box v outside every other box, if one exists.
/// Exact: each facet is subdivided along the endpoints of the other boxes
/// restricted to the facet hyperplane.
inline std::optional<Point> exposed_boundary_point(int v, const Representation& rep, CoverageOptions options = {}) {
  const Box& own = rep.box(v);
  const std::size_t d = rep.dim;
  std::size_t budget = options.node_budget;
  for (std::size_t axis = 0; axis < d; ++axis) {
    for (int side = 0; side < 2; ++side) {
      const Rational level = side == 0 ? own[axis].lo : own[axis].hi;
      std::vector<Interval> region;
      for (std::size_t i = 0; i < d; ++i)
        if (i != axis) region.push_back(own[i]);
      std::vector<std::vector<Interval>> covers;
      for (int u = 1; u <= rep.vertex_count(); ++u) {
        if (u == v || !rep.box(u)[axis].contains(level)) continue;
        std::vector<Interval> restricted;
        for (std::size_t i = 0; i < d; ++i)
          if (i != axis) restricted.push_back(rep.box(u)[i]);
        covers.push_back(std::move(restricted));
      }
      if (auto p = detail::uncovered_in_region(std::move(region), covers, budget)) {
        Point full;
        full.reserve(d);
        std::size_t k = 0;
        for (std::size_t i = 0; i < d; ++i) full.push_back(i == axis ? level : (*p)[k++]);
        return full;
      }
    }
  }
  return std::nullopt;
}

/// True iff every boundary point of box v lies in some other box, i.e.
/// condition (c2) fails for v.
inline bool boundary_covered(int v, const Representation& rep, CoverageOptions options = {}) {
  return !exposed_boundary_point(v, rep, options).has_value();
}

/// Half the L-infinity distance to the nearest other box, capped at 1/4.
inline Rational safe_radius(int v, const Point& p, const Representation& rep) {
  Rational r(1, 4);
  for (int u = 1; u <= rep.vertex_count(); ++u)
    if (u != v) r = std::min(r, Rational(linf_distance(p, rep.box(u)) / 2));
  return r;
}

struct C2Result {
  bool ok = true;
  std::vector<int> covered;                        // vertices violating (c2)
  std::vector<int> rejected_witnesses;             // stored witnesses that failed check_witness
  std::vector<std::optional<Witness>> witnesses;   // index v-1; valid witness when found
};

struct C2Options {
  /// Accept a stored witness that passes check_witness without sweeping.
  bool trust_witnesses = true;
  CoverageOptions coverage;
};

inline C2Result verify_c2(const Graph& g, const Representation& rep, C2Options options = {}) {
  detail::require_same_vertices(g, rep);
  C2Result result;
  result.witnesses.resize(rep.boxes.size());
  for (int v = 1; v <= rep.vertex_count(); ++v) {
    if (options.trust_witnesses && rep.witness(v)) {
      if (check_witness(v, rep)) {
        result.witnesses[v - 1] = rep.witness(v);
        continue;
      }
      result.rejected_witnesses.push_back(v);
    }
    if (auto p = exposed_boundary_point(v, rep, options.coverage)) {
      Rational r = safe_radius(v, *p, rep);
      result.witnesses[v - 1] = Witness{std::move(*p), std::move(r)};
    } else {
      result.covered.push_back(v);
    }
  }
  result.ok = result.covered.empty();
  return result;
}

struct Verification {
  C1Result c1;
  C2Result c2;
  bool ok() const { return c1.ok && c2.ok; }
};

inline Verification verify(const Graph& g, const Representation& rep, C2Options options = {}) {
  return {verify_c1(g, rep), verify_c2(g, rep, options)};
}

}  // namespace minorkit
