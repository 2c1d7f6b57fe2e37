#pragma once

#include <cstddef>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "minorkit/box.hpp"
#include "minorkit/boxbuild.hpp"
#include "minorkit/edit.hpp"
#include "minorkit/error.hpp"
#include "minorkit/flow.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/rational.hpp"
#include "minorkit/stealth.hpp"

namespace minorkit::io {

using json = nlohmann::json;

inline json to_json(const Rational& r) { return format_rational(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  fail(ErrorCode::ParseError, "expected a rational string, got " + j.dump());
}

inline json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline RationalVector vector_from_json(const json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

// --- graph -----------------------------------------------------------------

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    json je{{"u", e.u}, {"v", e.v}};
    if (e.gain) je["gain"] = to_json(*e.gain);
    edges.push_back(std::move(je));
  }
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& je : j.at("edges")) {
      Edge e{je.at("u").get<int>(), je.at("v").get<int>(), std::nullopt};
      if (je.contains("gain")) e.gain = rational_from_json(je.at("gain"));
      edges.push_back(std::move(e));
    }
    return Graph(n, std::move(edges));
  } catch (const json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("graph: ") + ex.what());
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, std::string("graph: ") + ex.what());
  }
}

// --- representation ----------------------------------------------------------

inline json to_json(const Interval& iv) { return json::array({to_json(iv.lo), to_json(iv.hi)}); }

inline json to_json(const Box& b) {
  json out = json::array();
  for (const auto& iv : b.intervals()) out.push_back(to_json(iv));
  return out;
}

inline json to_json(const Witness& w) { return {{"point", to_json(w.point)}, {"radius", to_json(w.radius)}}; }

inline json to_json(const Representation& rep) {
  json boxes = json::object();
  json witnesses = json::object();
  for (int v = 1; v <= rep.vertex_count(); ++v) {
    boxes[std::to_string(v)] = to_json(rep.box(v));
    if (rep.witness(v)) witnesses[std::to_string(v)] = to_json(*rep.witness(v));
  }
  return {{"dim", rep.dim}, {"boxes", std::move(boxes)}, {"witnesses", std::move(witnesses)}};
}

inline Representation representation_from_json(const json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    std::map<int, Box> by_vertex;
    for (const auto& [key, jb] : j.at("boxes").items()) {
      std::vector<Interval> iv;
      for (const auto& pair : jb) {
        if (!pair.is_array() || pair.size() != 2) fail(ErrorCode::ParseError, "interval must be [lo, hi]");
        iv.push_back({rational_from_json(pair[0]), rational_from_json(pair[1])});
      }
      by_vertex.emplace(std::stoi(key), Box(std::move(iv)));
    }
    std::vector<Box> boxes;
    int expected = 1;
    for (auto& [v, b] : by_vertex) {
      if (v != expected++) fail(ErrorCode::ParseError, "box vertices must be exactly 1..n");
      boxes.push_back(std::move(b));
    }
    Representation rep(dim, std::move(boxes));
    if (j.contains("witnesses")) {
      for (const auto& [key, jw] : j.at("witnesses").items()) {
        const int v = std::stoi(key);
        if (v < 1 || v > rep.vertex_count()) fail(ErrorCode::ParseError, "witness for unknown vertex " + key);
        rep.set_witness(v, {vector_from_json(jw.at("point")), rational_from_json(jw.at("radius"))});
      }
      rep.validate();
    }
    return rep;
  } catch (const json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("representation: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    fail(ErrorCode::ParseError, std::string("representation: bad vertex key"));
  } catch (const Error& ex) {
    if (ex.code() == ErrorCode::ParseError) throw;
    fail(ErrorCode::ParseError, std::string("representation: ") + ex.what());
  }
}

// --- edits -------------------------------------------------------------------

inline json to_json(const EditOp& op) {
  json out{{"kind", to_string(op.kind)}, {"n_before", op.n_before}};
  switch (op.kind) {
    case EditKind::VertexDelete:
      out["v"] = op.a;
      out["neighbors"] = op.nbrs_a;
      break;
    case EditKind::EdgeDelete:
      out["u"] = op.a;
      out["v"] = op.b;
      out["neighbors_v_after"] = op.nbrs_b;
      break;
    case EditKind::Contract:
      out["u"] = op.a;
      out["v"] = op.b;
      out["relabeled_to_top"] = op.swapped;
      out["neighbors_u"] = op.nbrs_a;
      out["neighbors_top"] = op.nbrs_b;
      break;
  }
  return out;
}

/// Edit list file: {"ops": [{"kind": "edge_delete", "u": 1, "v": 2}, ...]}.
/// Snapshots are captured while replaying against `g`.
inline EditSequence edits_from_json(const Graph& g, const json& j) {
  try {
    std::vector<EditOp> ops;
    Graph current = g;
    for (const auto& jo : j.at("ops")) {
      const auto kind = jo.at("kind").get<std::string>();
      EditOp op;
      if (kind == "vertex_delete") op = make_vertex_delete(current, jo.at("v").get<int>());
      else if (kind == "edge_delete") op = make_edge_delete(current, jo.at("u").get<int>(), jo.at("v").get<int>());
      else if (kind == "contract") op = make_contract(current, jo.at("u").get<int>(), jo.at("v").get<int>());
      else fail(ErrorCode::ParseError, "unknown edit kind '" + kind + "'");
      current = apply_edit(current, op);
      ops.push_back(std::move(op));
    }
    return make_sequence(g, std::move(ops));
  } catch (const json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("edits: ") + ex.what());
  }
}

inline json to_json(const ConstructionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace.steps) {
    json appended = json::object();
    for (std::size_t v = 0; v < s.appended.size(); ++v) {
      json ivs = json::array();
      for (const auto& iv : s.appended[v]) ivs.push_back(to_json(iv));
      appended[std::to_string(v + 1)] = std::move(ivs);
    }
    steps.push_back({{"undo", to_json(s.op)}, {"dim_before", s.dim_before}, {"dim_after", s.dim_after}, {"appended", std::move(appended)}});
  }
  return {{"base_dim", trace.base_dim}, {"final_dim", trace.final.dim}, {"steps", std::move(steps)}};
}

// --- flow ------------------------------------------------------------------

inline json to_json(const GainMatrix& h) {
  json rows = json::array();
  for (const auto& r : h.rows) rows.push_back(to_json(r));
  json edge_rows = json::array();
  for (std::size_t p = 0; p < h.edge_ends.size(); ++p)
    edge_rows.push_back({{"index", h.n + p + 1}, {"u", h.edge_ends[p].first}, {"v", h.edge_ends[p].second}});
  return {{"n", h.n}, {"t", h.t}, {"orientation", "+gain at the smaller endpoint"}, {"rows", std::move(rows)}, {"edge_rows", std::move(edge_rows)}};
}

inline json to_json(const AttackSpec& spec, const Graph& g) {
  json targets = json::array();
  for (std::size_t i = 0; i < spec.targets.size(); ++i) {
    const Edge& e = g.edge(spec.targets[i]);
    targets.push_back({{"u", e.u}, {"v", e.v}, {"index", g.flow_index(spec.targets[i])},
                       {"components", json::array({spec.crossings[i].first + 1, spec.crossings[i].second + 1})}});
  }
  return {{"k", spec.k}, {"components", spec.components}, {"targets", std::move(targets)}};
}

// --- files -------------------------------------------------------------------

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::exception& ex) {
    fail(ErrorCode::ParseError, path + ": " + ex.what());
  }
}

/// Writes via a temporary file and a rename.
inline void write_json_file(const std::string& path, const json& j) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(ErrorCode::InvalidInput, "cannot write " + tmp);
    out << j.dump(2) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) fail(ErrorCode::InvalidInput, "cannot rename " + tmp + " to " + path);
}

}  // namespace minorkit::io
