#include "vrank/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "test_support.hpp"
#include "vrank/errors.hpp"
#include "vrank/generators.hpp"

namespace vrank {
namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_graph_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

int coloring_error_line(const std::string& text) {
  try {
    parse_coloring_string(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(GraphFormat, SingleEdge) {
  EXPECT_EQ(parse_graph_string("p edge 2 1\ne 1 2\n"), testing::complete_graph(2));
}

TEST(GraphFormat, CanonicalOutput) {
  const Graph g = parse_graph_string("c triangle\n\np edge 3 3\ne 3 1\ne 2 1\ne 3 2\n");
  EXPECT_EQ(graph_to_string(g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST(GraphFormat, DuplicatesCollapse) {
  const Graph g = parse_graph_string("p edge 2 2\ne 1 2\ne 2 1\n");
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(graph_to_string(g), "p edge 2 1\ne 1 2\n");
}

TEST(GraphFormat, RoundTrip) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto n = static_cast<Vertex>(uniform_below(rng, 30));
    const Graph g = random_gnp(n, 0.2, rng());
    const std::string text = graph_to_string(g);
    const Graph back = parse_graph_string(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(graph_to_string(back), text);
  }
}

TEST(GraphFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line("p edge 2 1\ne 1 3\n"), 2);
  EXPECT_EQ(parse_error_line("c x\ne 1 2\n"), 2);
  EXPECT_EQ(parse_error_line("p edge 2 1\np edge 2 1\n"), 2);
  EXPECT_EQ(parse_error_line("p edge 2 1\ne 1 1\n"), 2);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 1 2\ne 2 3\n"), 3);
  EXPECT_EQ(parse_error_line("p edge 3 2\ne 1 2\n"), 3);
  EXPECT_EQ(parse_error_line("p edge 3 0\nx 1 2\n"), 2);
  EXPECT_EQ(parse_error_line("p edge 3 1\ne 1 two\n"), 2);
  EXPECT_EQ(parse_error_line("p graph 3 0\n"), 1);
  EXPECT_EQ(parse_error_line(""), 1);
}

TEST(GraphFormat, ErrorMessage) {
  try {
    parse_graph_string("p edge 2 1\ne 1 3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 2: ", 0), 0u) << e.what();
  }
}

TEST(ColoringFormat, RoundTrip) {
  const Coloring c(std::vector<Color>{3, 1, 2, 1});
  const std::string text = coloring_to_string(c);
  EXPECT_EQ(text, "v 1 3\nv 2 1\nv 3 2\nv 4 1\n");
  EXPECT_EQ(parse_coloring_string(text), c);
  EXPECT_EQ(parse_coloring_string("c hi\nv 1 2\n\nv 2 1\n"), Coloring(std::vector<Color>{2, 1}));
}

TEST(ColoringFormat, Errors) {
  EXPECT_EQ(coloring_error_line("v 1 1\nv 3 1\n"), 2);
  EXPECT_EQ(coloring_error_line("v 1 0\n"), 1);
  EXPECT_EQ(coloring_error_line("v 1\n"), 1);
  EXPECT_EQ(coloring_error_line("c ok\nx 1 1\n"), 2);
}

TEST(Files, RoundTripAndMissingFile) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string gpath = (dir / "vrank_io_test.col").string();
  const std::string cpath = (dir / "vrank_io_test.clr").string();
  const Graph g = grid_graph(3, 4);
  write_graph_file(gpath, g);
  EXPECT_EQ(read_graph_file(gpath), g);
  const Coloring c(std::vector<Color>{1, 2, 3});
  write_coloring_file(cpath, c);
  EXPECT_EQ(read_coloring_file(cpath), c);
  std::remove(gpath.c_str());
  std::remove(cpath.c_str());
  EXPECT_THROW(read_graph_file((dir / "vrank_no_such_file.col").string()), FileError);
}

}  // namespace
}  // namespace vrank
