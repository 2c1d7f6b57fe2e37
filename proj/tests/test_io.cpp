#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "minorkit/io.hpp"
#include "support.hpp"

using namespace minorkit;
using minorkit::io::json;

TEST(Io, GraphRoundTrip) {
  const Graph g(3, {{1, 2, Rational(3, 2)}, {2, 3, std::nullopt}});
  const Graph back = io::graph_from_json(io::to_json(g));
  EXPECT_TRUE(back.same_topology(g));
  EXPECT_EQ(*back.edge(0).gain, Rational(3, 2));
  EXPECT_FALSE(back.edge(1).gain.has_value());
}

TEST(Io, GraphErrorsBecomeParseErrors) {
  for (const char* text : {R"({"n": 2})", R"({"n": 2, "edges": [{"u": 1, "v": 1}]})",
                           R"({"n": 2, "edges": [{"u": 1, "v": 2, "gain": 0.5}]})",
                           R"({"n": 2, "edges": [{"u": 1, "v": 2, "gain": "1/0"}]})"}) {
    try {
      io::graph_from_json(json::parse(text));
      FAIL() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError) << text;
    }
  }
}

TEST(Io, RepresentationRoundTrip) {
  std::mt19937_64 rng(testkit::seed(71));
  const Graph t = testkit::random_tree(rng, 9);
  const Representation rep = build_tree_rep(t);
  const Representation back = io::representation_from_json(io::to_json(rep));
  EXPECT_EQ(back.boxes, rep.boxes);
  EXPECT_EQ(back.witnesses, rep.witnesses);
}

TEST(Io, RepresentationVertexKeysMustBeContiguous) {
  const json j = json::parse(R"({"dim": 1, "boxes": {"1": [["0", "1"]], "3": [["2", "3"]]}})");
  EXPECT_THROW(io::representation_from_json(j), Error);
  const json k = json::parse(R"({"dim": 1, "boxes": {"x": [["0", "1"]]}})");
  EXPECT_THROW(io::representation_from_json(k), Error);
}

TEST(Io, EditsFromJson) {
  const Graph g = Graph::from_pairs(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const json j = json::parse(R"({"ops": [{"kind": "edge_delete", "u": 1, "v": 4}, {"kind": "contract", "u": 3, "v": 4}]})");
  const auto seq = io::edits_from_json(g, j);
  EXPECT_EQ(seq.counts.edge_deletions, 1);
  EXPECT_EQ(seq.counts.contractions, 1);
  EXPECT_EQ(seq.base.n(), 3);
  EXPECT_THROW(io::edits_from_json(g, json::parse(R"({"ops": [{"kind": "twist"}]})")), Error);
}

TEST(Io, AtomicWrite) {
  const auto path = (std::filesystem::temp_directory_path() / "minorkit_io_test.json").string();
  io::write_json_file(path, json{{"a", 1}});
  EXPECT_EQ(io::read_json_file(path)["a"], 1);
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  std::remove(path.c_str());
  EXPECT_THROW(io::read_json_file(path), Error);
}
