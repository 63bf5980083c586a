#pragma once
// Text formats: edge lists, coloring JSON and Graphviz DOT export.

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "intcol/coloring.hpp"
#include "intcol/graph.hpp"

namespace intcol {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads "n m" followed by m lines "u v". Throws FormatError or GraphError.
inline Graph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw FormatError("malformed header, expected \"n m\"");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long a = 0, b = 0;
    if (!(in >> a >> b)) {
      throw FormatError("edge count mismatch: header declares " + std::to_string(m) +
                        " edges, found " + std::to_string(i));
    }
    if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("endpoint out of range in edge (" + std::to_string(a) + "," +
                       std::to_string(b) + ")");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  std::string extra;
  if (in >> extra) throw FormatError("edge count mismatch: trailing data after " + std::to_string(m) + " edges");
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

using json = nlohmann::ordered_json;

inline json coloring_to_json(const EdgeColoring& coloring) {
  json edges = json::array();
  for (const auto& [e, c] : coloring.assignment()) edges.push_back({e.u, e.v, c});
  return json{{"t", coloring.t()}, {"edges", std::move(edges)}};
}

inline EdgeColoring coloring_from_json(const json& j) {
  try {
    EdgeColoring out(j.at("t").get<int>());
    for (const auto& row : j.at("edges")) {
      if (!row.is_array() || row.size() != 3) throw FormatError("coloring edge must be [u, v, color]");
      const Vertex a = row[0].get<Vertex>(), b = row[1].get<Vertex>();
      if (a == b) throw FormatError("loop in coloring at vertex " + std::to_string(a));
      if (out.contains(Edge(a, b))) {
        throw FormatError("edge (" + std::to_string(a) + "," + std::to_string(b) + ") colored twice");
      }
      out.set(a, b, row[2].get<Color>());
    }
    return out;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed coloring JSON: ") + e.what());
  }
}

/// Compact JSON, edges sorted by (min, max) endpoint.
inline std::string write_coloring_json(const EdgeColoring& coloring) {
  return coloring_to_json(coloring).dump() + "\n";
}

inline EdgeColoring read_coloring_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed coloring JSON: ") + e.what());
  }
  return coloring_from_json(j);
}

/// Graph spanned by the colored edges, on vertices 0..max id.
inline Graph graph_of_coloring(const EdgeColoring& coloring) {
  int n = 0;
  std::vector<Edge> edges;
  for (const auto& [e, c] : coloring.assignment()) {
    n = std::max(n, e.v + 1);
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

namespace detail {

inline const std::array<const char*, 10>& dot_palette() {
  static const std::array<const char*, 10> names{"red",    "blue",  "green3", "orange", "purple",
                                                 "brown",  "cyan3", "magenta", "gold3", "gray40"};
  return names;
}

}  // namespace detail

/**
 * Undirected DOT: vertices ascending, then one "u -- v" line per edge in
 * (min, max) order. With a coloring, each edge carries its color as label and
 * a palette color chosen by (c - 1) mod 10.
 */
inline std::string write_dot(const Graph& g, const EdgeColoring* coloring = nullptr) {
  if (coloring) detail::require_cover(g, *coloring);
  std::string out = "graph {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (coloring) {
      const Color c = coloring->at(e);
      const auto& names = detail::dot_palette();
      const auto slot = static_cast<std::size_t>(((c - 1) % 10 + 10) % 10);
      out += " [label=" + std::to_string(c) + ", color=" + names[slot] + "]";
    }
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace intcol
