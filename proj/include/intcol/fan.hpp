#pragma once
/**
 * Interval Delta-colorings of the triangular fans TF_n.
 *
 * Small fans (3 <= n <= 8) come from a base table found by exhaustive search.
 * Larger fans grow from TF_7 (odd n) or TF_8 (even n) two fan vertices at a
 * time with fixed extension formulas written over 1-based labels u, v_i, w_i.
 * The TF_7 and TF_8 entries are searched under palette constraints at u and
 * at the last fan vertex, so that the first extension step fits.
 *
 * Every TF_n with n >= 5 has n - 4 separating triangles u v_i v_{i+1}
 * (2 <= i <= n-3) and is still interval colorable, so separating triangles
 * do not rule out interval colorings of outerplanar triangulations.
 */

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "intcol/coloring.hpp"
#include "intcol/fan_base_table_data.hpp"
#include "intcol/generators.hpp"
#include "intcol/graph.hpp"
#include "intcol/outerplanar.hpp"
#include "intcol/solver.hpp"

namespace intcol {

struct LabeledColor {
  std::string a, b;
  Color color;
};

inline std::string fan_v(int i) { return "v" + std::to_string(i); }
inline std::string fan_w(int i) { return "w" + std::to_string(i); }

/// New edges of odd-order extension step i (adds v_{2i+1}, v_{2i+2}, w_{2i}, w_{2i+1}).
inline std::vector<LabeledColor> fan_odd_step(int i) {
  return {
      {"u", fan_v(2 * i + 1), 2 * i + 2},
      {"u", fan_v(2 * i + 2), 2 * i + 1},
      {fan_v(2 * i + 1), fan_w(2 * i), 2 * i - 1},
      {fan_w(2 * i + 1), fan_v(2 * i + 2), 2 * i - 1},
      {fan_v(2 * i + 1), fan_v(2 * i + 2), 2 * i},
      {fan_v(2 * i), fan_w(2 * i), 2 * i},
      {fan_v(2 * i), fan_v(2 * i + 1), 2 * i + 1},
      {fan_v(2 * i + 1), fan_w(2 * i + 1), 2 * i - 2},
  };
}

/// New edges of even-order extension step i (adds v_{2i+2}, v_{2i+3}, w_{2i+1}, w_{2i+2}).
inline std::vector<LabeledColor> fan_even_step(int i) {
  return {
      {"u", fan_v(2 * i + 2), 2 * i + 3},
      {"u", fan_v(2 * i + 3), 2 * i + 2},
      {fan_v(2 * i + 2), fan_w(2 * i + 1), 2 * i},
      {fan_w(2 * i + 2), fan_v(2 * i + 3), 2 * i},
      {fan_v(2 * i + 2), fan_v(2 * i + 3), 2 * i + 1},
      {fan_v(2 * i + 1), fan_w(2 * i + 1), 2 * i + 1},
      {fan_v(2 * i + 1), fan_v(2 * i + 2), 2 * i + 2},
      {fan_v(2 * i + 2), fan_w(2 * i + 2), 2 * i - 1},
  };
}

inline int fan_max_degree(int n) { return gen_triangular_fan(n).graph.max_degree(); }

/**
 * Carries a coloring of TF_from over to TF_to (same parity, to >= from) and
 * applies the extension steps in between. Edges are matched by label, so the
 * different dense ids of the two fans do not matter.
 */
inline EdgeColoring extend_fan_coloring(const EdgeColoring& base, int from, int to) {
  if (to < from || (to - from) % 2 != 0) throw std::invalid_argument("fan extension needs same parity and to >= from");
  const LabeledGraph small = gen_triangular_fan(from);
  const LabeledGraph big = gen_triangular_fan(to);
  EdgeColoring out;
  for (const auto& [e, c] : base.assignment()) {
    const auto a = small.labels.name(e.u), b = small.labels.name(e.v);
    if (!a || !b) throw std::invalid_argument("base coloring has an edge outside TF_" + std::to_string(from));
    out.set(big.labels[*a], big.labels[*b], c);
  }
  // Step i turns TF_{2i+1} into TF_{2i+3} (odd) or TF_{2i+2} into TF_{2i+4} (even).
  const bool odd = from % 2 == 1;
  for (int n = from + 2; n <= to; n += 2) {
    const int i = odd ? (n - 3) / 2 : (n - 4) / 2;
    for (const auto& lc : odd ? fan_odd_step(i) : fan_even_step(i)) {
      out.set(big.labels[lc.a], big.labels[lc.b], lc.color);
    }
  }
  out.set_t(out.max_color());
  return out;
}

/// Interval Delta(TF_n)-colorings for n = 3..8.
struct FanBaseTable {
  std::map<int, EdgeColoring> entries;
  friend bool operator==(const FanBaseTable&, const FanBaseTable&) = default;
};

/**
 * Palette the last fan vertex of TF_n (n = 7 or 8) must have so that the
 * first extension step turns it into an interval: the three colors just below
 * the two new colors the step puts on it.
 */
inline std::vector<Color> fan_boundary_palette(int n) {
  const std::string last = fan_v(n - 1);
  const int i = n % 2 == 1 ? (n - 1) / 2 : (n - 2) / 2;
  Color lowest = 0;
  for (const auto& lc : n % 2 == 1 ? fan_odd_step(i) : fan_even_step(i)) {
    if (lc.a == last || lc.b == last) lowest = lowest == 0 ? lc.color : std::min(lowest, lc.color);
  }
  return {lowest - 3, lowest - 2, lowest - 1};
}

/// Searches the base table: first solution in solver order for each n, with
/// TF_7 and TF_8 constrained so that two extension steps validate.
inline FanBaseTable derive_base_table() {
  FanBaseTable table;
  for (int n = 3; n <= 8; ++n) {
    const LabeledGraph fan = gen_triangular_fan(n);
    const int delta = fan.graph.max_degree();
    SearchOptions opts;
    if (n >= 7) {
      std::vector<Color> all;
      for (Color c = 1; c <= delta; ++c) all.push_back(c);
      opts.required_palettes[fan.labels["u"]] = all;
      opts.required_palettes[fan.labels[fan_v(n - 1)]] = fan_boundary_palette(n);
      opts.accept = [n](const EdgeColoring& c) {
        for (int to : {n + 2, n + 4}) {
          if (!is_interval_coloring(gen_triangular_fan(to).graph, extend_fan_coloring(c, n, to))) return false;
        }
        return true;
      };
    }
    SearchResult r = search_interval_coloring(fan.graph, delta, opts);
    if (r.status != SearchStatus::kFound) {
      throw std::logic_error("no interval " + std::to_string(delta) + "-coloring of TF_" + std::to_string(n));
    }
    table.entries[n] = std::move(*r.coloring);
  }
  return table;
}

/// The frozen base table (see derive_base_table for how it was produced).
inline const FanBaseTable& fan_base_table() {
  static const FanBaseTable table = [] {
    FanBaseTable t;
    for (const auto& row : detail::kFanBaseRows) {
      auto& entry = t.entries[row.n];
      entry.set_t(row.t);
      entry.set(row.a, row.b, row.color);
    }
    return t;
  }();
  return table;
}

/// Interval coloring of TF_n with exactly Delta(TF_n) colors.
inline EdgeColoring color_fan(int n) {
  if (n < 3) throw GraphError("triangular fan needs n >= 3");
  const auto& table = fan_base_table().entries;
  EdgeColoring out = n <= 8 ? table.at(n) : extend_fan_coloring(table.at(n % 2 == 1 ? 7 : 8), n % 2 == 1 ? 7 : 8, n);
  const Graph g = gen_triangular_fan(n).graph;
  if (auto bad = find_violation(g, out)) {
    throw std::logic_error("fan coloring of TF_" + std::to_string(n) + " is invalid: " + describe(*bad));
  }
  if (out.t() != g.max_degree()) throw std::logic_error("fan coloring does not use exactly Delta colors");
  return out;
}

struct AxenovichReport {
  int n;
  int max_degree;
  std::vector<Triple> separating_triangles;
  EdgeColoring coloring;
  bool coloring_valid;
};

/// TF_n (n >= 5) has separating triangles and an interval coloring.
inline AxenovichReport axenovich_demo(int n) {
  if (n < 5) throw GraphError("TF_n has separating triangles only for n >= 5");
  const Graph g = gen_triangular_fan(n).graph;
  const Recognition r = recognize_outerplanar_2connected(g);
  if (!std::holds_alternative<OuterEmbedding>(r)) throw std::logic_error("TF_n failed outerplanarity recognition");
  AxenovichReport report{n, g.max_degree(), separating_triangles(g, std::get<OuterEmbedding>(r)), color_fan(n), false};
  report.coloring_valid = is_interval_coloring(g, report.coloring);
  return report;
}

}  // namespace intcol
