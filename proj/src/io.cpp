#include "vrank/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

#include "vrank/errors.hpp"

namespace vrank {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t parse_int(std::string_view token, std::size_t line, const char* what) {
  std::int64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, std::string("expected integer ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

bool is_comment(const std::vector<std::string_view>& tokens) {
  return !tokens.empty() && tokens.front() == "c";
}

template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto tokens = split(line);
    if (tokens.empty() || is_comment(tokens)) continue;
    fn(tokens, number);
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot open '" + path + "' for writing");
  return out;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::int64_t n = -1;
  std::int64_t m = -1;
  std::size_t last_line = 0;
  std::vector<Edge> edges;
  for_each_line(in, [&](const std::vector<std::string_view>& t, std::size_t line) {
    last_line = line;
    if (t.front() == "p") {
      if (n >= 0) throw ParseError(line, "duplicate problem line");
      if (t.size() != 4 || t[1] != "edge") throw ParseError(line, "expected 'p edge <n> <m>'");
      n = parse_int(t[2], line, "vertex count");
      m = parse_int(t[3], line, "edge count");
      if (n < 0 || m < 0) throw ParseError(line, "negative count");
      if (n > INT32_MAX) throw ParseError(line, "vertex count too large");
      edges.reserve(static_cast<std::size_t>(m));
      return;
    }
    if (t.front() == "e") {
      if (n < 0) throw ParseError(line, "edge before problem line");
      if (t.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
      const auto u = parse_int(t[1], line, "endpoint");
      const auto v = parse_int(t[2], line, "endpoint");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line, "endpoint outside 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line, "self-loop");
      if (static_cast<std::int64_t>(edges.size()) == m) {
        throw ParseError(line, "more edge lines than the declared " + std::to_string(m));
      }
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(t.front()) + "'");
  });
  if (n < 0) throw ParseError(last_line + 1, "missing problem line");
  if (static_cast<std::int64_t>(edges.size()) != m) {
    throw ParseError(last_line + 1, "declared " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

Coloring parse_coloring(std::istream& in) {
  Coloring c;
  for_each_line(in, [&](const std::vector<std::string_view>& t, std::size_t line) {
    if (t.front() != "v" || t.size() != 3) throw ParseError(line, "expected 'v <vertex> <color>'");
    const auto v = parse_int(t[1], line, "vertex");
    const auto col = parse_int(t[2], line, "color");
    if (v != static_cast<std::int64_t>(c.size()) + 1) {
      throw ParseError(line, "expected vertex " + std::to_string(c.size() + 1) + ", got " +
                                 std::to_string(v));
    }
    if (col < 1 || col > INT32_MAX) throw ParseError(line, "color must be a positive integer");
    c.colors.push_back(static_cast<Color>(col));
  });
  return c;
}

Coloring parse_coloring_string(const std::string& text) {
  std::istringstream in(text);
  return parse_coloring(in);
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (std::size_t v = 0; v < c.size(); ++v) out << "v " << v + 1 << ' ' << c.colors[v] << '\n';
}

std::string coloring_to_string(const Coloring& c) {
  std::ostringstream out;
  write_coloring(out, c);
  return out.str();
}

Graph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return parse_graph(in);
}

void write_graph_file(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_graph(out, g);
}

Coloring read_coloring_file(const std::string& path) {
  auto in = open_input(path);
  return parse_coloring(in);
}

void write_coloring_file(const std::string& path, const Coloring& c) {
  auto out = open_output(path);
  write_coloring(out, c);
}

}  // namespace vrank
