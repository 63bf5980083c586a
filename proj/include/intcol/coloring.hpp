#pragma once
/**
 * Edge colorings and the interval-coloring validator.
 *
 * An interval t-coloring is a proper edge coloring with colors 1..t, every
 * color used, where the colors at each vertex form a block of consecutive
 * integers. The validator here is the arbiter for every coloring produced
 * anywhere in the library.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "intcol/graph.hpp"

namespace intcol {

using Color = int;

/// Edge -> color map with a declared color count t.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(int t) : t_(t) {}

  int t() const { return t_; }
  void set_t(int t) { t_ = t; }

  void set(Vertex a, Vertex b, Color c) { colors_[Edge(a, b)] = c; }
  void set(Edge e, Color c) { colors_[e] = c; }
  void erase(Edge e) { colors_.erase(e); }

  bool contains(Edge e) const { return colors_.count(e) > 0; }
  Color at(Edge e) const {
    auto it = colors_.find(e);
    if (it == colors_.end()) {
      throw std::out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") is not colored");
    }
    return it->second;
  }
  Color at(Vertex a, Vertex b) const { return at(Edge(a, b)); }

  std::size_t size() const { return colors_.size(); }
  /// Sorted by (min, max) endpoint.
  const std::map<Edge, Color>& assignment() const { return colors_; }

  Color max_color() const {
    Color m = 0;
    for (const auto& [e, c] : colors_) m = std::max(m, c);
    return m;
  }
  Color min_color() const {
    if (colors_.empty()) return 0;
    Color m = colors_.begin()->second;
    for (const auto& [e, c] : colors_) m = std::min(m, c);
    return m;
  }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int t_ = 0;
  std::map<Edge, Color> colors_;
};

/// Colors on the edges at one vertex, sorted and deduplicated.
struct Palette {
  Vertex vertex = 0;
  std::vector<Color> colors;

  bool is_interval() const {
    return colors.empty() || colors.back() - colors.front() + 1 == static_cast<int>(colors.size());
  }
};

namespace detail {

inline void require_cover(const Graph& g, const EdgeColoring& coloring) {
  for (const Edge& e : g.edges()) {
    if (!coloring.contains(e)) {
      throw std::invalid_argument("coloring misses edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + ")");
    }
  }
  if (coloring.size() != static_cast<std::size_t>(g.edge_count())) {
    throw std::invalid_argument("coloring has edges that are not in the graph");
  }
}

}  // namespace detail

inline Palette palette(const Graph& g, const EdgeColoring& coloring, Vertex v) {
  Palette p{v, {}};
  for (const auto& inc : g.incident(v)) p.colors.push_back(coloring.at(g.edge(inc.edge)));
  std::sort(p.colors.begin(), p.colors.end());
  p.colors.erase(std::unique(p.colors.begin(), p.colors.end()), p.colors.end());
  return p;
}

struct NotProper {
  Vertex vertex;
  Color color;
};
struct NotInterval {
  Vertex vertex;
  std::vector<Color> palette;
};
struct ColorUnused {
  Color color;
};
struct ColorOutOfRange {
  Edge edge;
  Color color;
};

using Violation = std::variant<NotProper, NotInterval, ColorUnused, ColorOutOfRange>;

inline std::string describe(const Violation& violation) {
  struct {
    std::string operator()(const NotProper& x) const {
      return "color " + std::to_string(x.color) + " repeats at vertex " + std::to_string(x.vertex);
    }
    std::string operator()(const NotInterval& x) const {
      std::string s = "palette of vertex " + std::to_string(x.vertex) + " is not an interval: {";
      for (std::size_t i = 0; i < x.palette.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(x.palette[i]);
      }
      return s + "}";
    }
    std::string operator()(const ColorUnused& x) const {
      return "color " + std::to_string(x.color) + " is not used";
    }
    std::string operator()(const ColorOutOfRange& x) const {
      return "edge (" + std::to_string(x.edge.u) + "," + std::to_string(x.edge.v) + ") has color " +
             std::to_string(x.color) + " outside 1..t";
    }
  } visitor;
  return std::visit(visitor, violation);
}

/**
 * First violation of the interval t-coloring conditions, or nullopt when the
 * coloring is valid.
 *
 * Scan order: out-of-range colors by edge, then vertices ascending (repeated
 * color first, then non-interval palette), then unused colors ascending.
 * Throws std::invalid_argument when the coloring does not cover exactly E(G).
 */
inline std::optional<Violation> find_violation(const Graph& g, const EdgeColoring& coloring) {
  detail::require_cover(g, coloring);
  const int t = coloring.t();
  for (const Edge& e : g.edges()) {
    const Color c = coloring.at(e);
    if (c < 1 || c > t) return ColorOutOfRange{e, c};
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<Color> raw;
    for (const auto& inc : g.incident(v)) raw.push_back(coloring.at(g.edge(inc.edge)));
    std::sort(raw.begin(), raw.end());
    auto dup = std::adjacent_find(raw.begin(), raw.end());
    if (dup != raw.end()) return NotProper{v, *dup};
    Palette p{v, std::move(raw)};
    if (!p.is_interval()) return NotInterval{v, p.colors};
  }
  std::vector<char> used(static_cast<std::size_t>(std::max(t, 0)) + 1, 0);
  for (const auto& [e, c] : coloring.assignment()) used[static_cast<std::size_t>(c)] = 1;
  for (Color c = 1; c <= t; ++c) {
    if (!used[static_cast<std::size_t>(c)]) return ColorUnused{c};
  }
  return std::nullopt;
}

inline bool is_interval_coloring(const Graph& g, const EdgeColoring& coloring) {
  return !find_violation(g, coloring).has_value();
}

/// Shifts colors so the smallest is 1 and sets t to the largest.
inline EdgeColoring normalize(const EdgeColoring& coloring) {
  if (coloring.size() == 0) return EdgeColoring(0);
  const Color shift = coloring.min_color() - 1;
  EdgeColoring out;
  for (const auto& [e, c] : coloring.assignment()) out.set(e, c - shift);
  out.set_t(out.max_color());
  return out;
}

/// Count of (even, odd) integers in [lo, lo + size).
inline std::pair<int, int> parity_counts(int lo, int size) {
  int even = 0;
  for (int c = lo; c < lo + size; ++c) even += (c % 2 == 0);
  return {even, size - even};
}

}  // namespace intcol
