#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "diffcolor/coloring.hpp"
#include "diffcolor/graph.hpp"

namespace diffcolor {

/// 8-bit RGB triple used by the gradient map coloring.
struct Rgb {
  int r = 0, g = 0, b = 0;
};

std::string to_hex(const Rgb& c);              // "#rrggbb"
Rgb rgb_from_hex(const std::string& s);        // accepts "#rrggbb" / "rrggbb"

/// Edge-list format: first line "n m", then m lines "u v" (0-based).
/// Parse errors carry 1-based line numbers.
Graph read_edge_list(std::istream& in, GraphClass cls = GraphClass::general);
Graph read_edge_list_file(const std::string& path, GraphClass cls = GraphClass::general);
void write_edge_list(std::ostream& out, const Graph& g);
std::string edge_list_string(const Graph& g);

/// DOT subset: `graph [name] { a -- b; c; ... }`. Identifiers (bare or
/// quoted) map to vertex indices in order of first appearance; attribute
/// blocks are skipped; duplicate edges and self-loops are dropped.
/// Returns the graph plus the identifier table indexed by vertex.
std::pair<Graph, std::vector<std::string>> read_dot(std::istream& in,
                                                    GraphClass cls = GraphClass::general);
std::pair<Graph, std::vector<std::string>> read_dot_file(const std::string& path,
                                                         GraphClass cls = GraphClass::general);

/// Plain DOT emission; when fills is non-empty it must have one color per
/// vertex and each node gets `style=filled, fillcolor="#rrggbb"`.
void write_dot(std::ostream& out, const Graph& g, const std::vector<Rgb>& fills = {});
std::string dot_string(const Graph& g, const std::vector<Rgb>& fills = {});

/// Coloring format: n lines "vertex color". k comes from context.
Coloring read_coloring(std::istream& in, int n, int k);
Coloring read_coloring_file(const std::string& path, int n, int k);
void write_coloring(std::ostream& out, const Coloring& c);

Graph read_graph_file(const std::string& path, const std::string& format,
                      GraphClass cls = GraphClass::general);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace diffcolor
