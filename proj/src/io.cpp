#include "diffcolor/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace diffcolor {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + msg);
}

std::ifstream open_or_throw(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return in;
}

}  // namespace

std::string to_hex(const Rgb& c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

Rgb rgb_from_hex(const std::string& s) {
  std::string h = s;
  if (!h.empty() && h[0] == '#') h = h.substr(1);
  if (h.size() != 6 || !std::all_of(h.begin(), h.end(), [](unsigned char c) { return std::isxdigit(c); }))
    throw std::invalid_argument("expected color of the form #rrggbb, got '" + s + "'");
  auto byte = [&](int i) { return std::stoi(h.substr(i, 2), nullptr, 16); };
  return Rgb{byte(0), byte(2), byte(4)};
}

Graph read_edge_list(std::istream& in, GraphClass cls) {
  std::string line;
  int lineno = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      if (line[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_content_line()) throw std::invalid_argument("empty graph file");
  std::istringstream head(line);
  long long n = -1, m = -1;
  if (!(head >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "expected header 'n m'");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line()) parse_fail(lineno + 1, "expected edge line 'u v'");
    std::istringstream es(line);
    long long u, v;
    std::string extra;
    if (!(es >> u >> v) || (es >> extra))
      parse_fail(lineno, "expected edge line 'u v', got '" + line + "'");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(lineno, "edge endpoint out of range [0," + std::to_string(n - 1) + "]");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  try {
    return Graph(static_cast<int>(n), std::move(edges), cls);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("invalid graph: ") + e.what());
  }
}

Graph read_edge_list_file(const std::string& path, GraphClass cls) {
  auto in = open_or_throw(path);
  return read_edge_list(in, cls);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string edge_list_string(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

namespace {

struct DotLexer {
  std::istream& in;
  int line = 1;

  // Token kinds: identifier, punctuation ("--", "{", "}", ";", "[", "]", "=", ","), eof.
  std::string next() {
    int c;
    while ((c = in.get()) != EOF) {
      if (c == '\n') ++line;
      if (std::isspace(c)) continue;
      if (c == '/') {  // // and /* */ comments
        int c2 = in.peek();
        if (c2 == '/') {
          while ((c = in.get()) != EOF && c != '\n') {
          }
          ++line;
          continue;
        }
        if (c2 == '*') {
          in.get();
          int prev = 0;
          while ((c = in.get()) != EOF && !(prev == '*' && c == '/')) {
            if (c == '\n') ++line;
            prev = c;
          }
          continue;
        }
        parse_fail(line, "unexpected '/'");
      }
      if (c == '"') {
        std::string s;
        while ((c = in.get()) != EOF && c != '"') {
          if (c == '\\') c = in.get();
          if (c == '\n') ++line;
          s.push_back(static_cast<char>(c));
        }
        if (c == EOF) parse_fail(line, "unterminated string");
        return s.empty() ? std::string("\"\"") : s;
      }
      if (c == '-') {
        int c2 = in.get();
        if (c2 == '-' || c2 == '>') return "--";
        parse_fail(line, "stray '-'");
      }
      if (std::strchr("{};[]=,", c)) return std::string(1, static_cast<char>(c));
      if (std::isalnum(c) || c == '_' || c == '.') {
        std::string s(1, static_cast<char>(c));
        while ((c = in.peek()) != EOF && (std::isalnum(c) || c == '_' || c == '.')) s.push_back(static_cast<char>(in.get()));
        return s;
      }
      parse_fail(line, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    return "";
  }
};

bool is_dot_keyword(const std::string& t) {
  return t == "node" || t == "edge" || t == "graph" || t == "subgraph" || t == "strict";
}

}  // namespace

std::pair<Graph, std::vector<std::string>> read_dot(std::istream& in, GraphClass cls) {
  DotLexer lex{in};
  std::string t = lex.next();
  if (t == "strict") t = lex.next();
  if (t != "graph") parse_fail(lex.line, "expected 'graph' (directed graphs unsupported)");
  t = lex.next();
  if (t != "{") {
    t = lex.next();  // optional graph name
    if (t != "{") parse_fail(lex.line, "expected '{'");
  }

  std::map<std::string, int> index;
  std::vector<std::string> names;
  auto vertex = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(names.size());
    index[name] = id;
    names.push_back(name);
    return id;
  };
  auto skip_attrs = [&](std::string& tok) {
    while (tok == "[") {
      int depth = 1;
      while (depth > 0) {
        tok = lex.next();
        if (tok.empty()) parse_fail(lex.line, "unterminated attribute block");
        if (tok == "[") ++depth;
        if (tok == "]") --depth;
      }
      tok = lex.next();
    }
  };

  std::set<Edge> edges;
  t = lex.next();
  while (t != "}") {
    if (t.empty()) parse_fail(lex.line, "unexpected end of input, missing '}'");
    if (t == ";") {
      t = lex.next();
      continue;
    }
    if (is_dot_keyword(t)) {  // default-attribute statements: node [..]; edge [..];
      t = lex.next();
      skip_attrs(t);
      continue;
    }
    int u = vertex(t);
    t = lex.next();
    skip_attrs(t);
    while (t == "--") {
      t = lex.next();
      if (t.empty() || t == ";" || t == "}") parse_fail(lex.line, "dangling '--'");
      int v = vertex(t);
      if (u != v) edges.insert({std::min(u, v), std::max(u, v)});
      u = v;
      t = lex.next();
      skip_attrs(t);
    }
    if (t == "=") {  // graph-level attribute `name = value`
      t = lex.next();
      t = lex.next();
    }
  }
  return {Graph(static_cast<int>(names.size()), {edges.begin(), edges.end()}, cls), names};
}

std::pair<Graph, std::vector<std::string>> read_dot_file(const std::string& path, GraphClass cls) {
  auto in = open_or_throw(path);
  return read_dot(in, cls);
}

void write_dot(std::ostream& out, const Graph& g, const std::vector<Rgb>& fills) {
  if (!fills.empty() && static_cast<int>(fills.size()) != g.vertex_count())
    throw std::invalid_argument("write_dot: one fill color per vertex required");
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  v" << v;
    if (!fills.empty()) out << " [style=filled, fillcolor=\"" << to_hex(fills[v]) << "\"]";
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  v" << u << " -- v" << v << ";\n";
  out << "}\n";
}

std::string dot_string(const Graph& g, const std::vector<Rgb>& fills) {
  std::ostringstream out;
  write_dot(out, g, fills);
  return out.str();
}

Coloring read_coloring(std::istream& in, int n, int k) {
  Coloring c;
  c.k = k;
  c.colors.assign(n, 0);
  std::vector<char> seen(n, 0);
  std::string line;
  int lineno = 0;
  int count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long long v, col;
    std::string extra;
    if (!(ls >> v >> col) || (ls >> extra))
      parse_fail(lineno, "expected 'vertex color', got '" + line + "'");
    if (v < 0 || v >= n) parse_fail(lineno, "vertex " + std::to_string(v) + " out of range");
    if (seen[v]) parse_fail(lineno, "vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    c.colors[v] = static_cast<int>(col);
    ++count;
  }
  if (count != n)
    throw std::invalid_argument("coloring file lists " + std::to_string(count) + " of " +
                                std::to_string(n) + " vertices");
  return c;
}

Coloring read_coloring_file(const std::string& path, int n, int k) {
  auto in = open_or_throw(path);
  return read_coloring(in, n, k);
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (int v = 0; v < c.n(); ++v) out << v << ' ' << c.colors[v] << '\n';
}

Graph read_graph_file(const std::string& path, const std::string& format, GraphClass cls) {
  if (format == "edges") return read_edge_list_file(path, cls);
  if (format == "dot") return read_dot_file(path, cls).first;
  throw std::invalid_argument("unknown graph format '" + format + "' (use edges|dot)");
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace diffcolor
