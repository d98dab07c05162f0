#pragma once

#include <iosfwd>
#include <string>

#include "vrank/graph.hpp"
#include "vrank/validators.hpp"

namespace vrank {

// Graph text format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>          (m lines, endpoints 1-indexed)
// Output lists edges with u < v in ascending lexicographic order.
//
// Coloring text format: one line `v <vertex> <color>` per vertex, vertices
// 1-indexed and ascending. Comment lines start with `c`.
//
// Parsers are strict and throw ParseError carrying the 1-based line number.

Graph parse_graph(std::istream& in);
Graph parse_graph_string(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

Coloring parse_coloring(std::istream& in);
Coloring parse_coloring_string(const std::string& text);
void write_coloring(std::ostream& out, const Coloring& c);
std::string coloring_to_string(const Coloring& c);

Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);
Coloring read_coloring_file(const std::string& path);
void write_coloring_file(const std::string& path, const Coloring& c);

}  // namespace vrank
