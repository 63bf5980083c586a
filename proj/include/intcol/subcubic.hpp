#pragma once
/**
 * Interval colorings of 2-connected outerplanar graphs with maximum degree at
 * most 3.
 *
 * color_subcubic_le4() follows the inductive construction: find a reduction
 * configuration (two adjacent degree-2 vertices, or a degree 3-2-3
 * triangle), shrink the graph, color the smaller graph recursively and splice
 * the removed edges back in. Every splice is checked with the validator.
 *
 * color_optimal_subcubic() returns the least number of colors: 3 for even
 * order (outer cycle alternating 1,2 and chords 3), otherwise 4.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "intcol/coloring.hpp"
#include "intcol/graph.hpp"
#include "intcol/outerplanar.hpp"
#include "intcol/solver.hpp"

namespace intcol {

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ReductionCase {
  kBaseEvenCycle,
  kBaseSmall,
  kPairNewEdge,        // adjacent degree-2 pair, xy not an edge
  kPairExistingEdge,   // adjacent degree-2 pair, xy an edge
  kPairOddCycle,       // as above, and removing u, v leaves an odd cycle
  kTriangle,           // degree 3-2-3 triangle contracted to one vertex
  kTriangleOddCycle,   // as above, and the contraction is an odd cycle
};

inline const char* to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::kBaseEvenCycle: return "base-even-cycle";
    case ReductionCase::kBaseSmall: return "base-small";
    case ReductionCase::kPairNewEdge: return "pair-new-edge";
    case ReductionCase::kPairExistingEdge: return "pair-existing-edge";
    case ReductionCase::kPairOddCycle: return "pair-odd-cycle";
    case ReductionCase::kTriangle: return "triangle";
    case ReductionCase::kTriangleOddCycle: return "triangle-odd-cycle";
  }
  return "unknown";
}

/// One level of the recursion. For pair cases (u, v) are the removed
/// degree-2 vertices and (x, y) their outside neighbors. For triangle cases
/// v is the degree-2 apex, u and w the degree-3 corners, x and y the outside
/// neighbors of u and w; the contracted vertex keeps u's id.
struct ReductionStep {
  ReductionCase kind;
  int edges_before = 0;
  std::optional<Vertex> u, v, w, x, y;
};

namespace detail {

/// Mutable adjacency over sparse ids, used while shrinking the graph.
class WorkGraph {
 public:
  explicit WorkGraph(const Graph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) adj_[v];
    for (const Edge& e : g.edges()) add_edge(e.u, e.v);
  }

  void add_edge(Vertex a, Vertex b) {
    adj_[a].insert(b);
    adj_[b].insert(a);
  }
  void remove_edge(Vertex a, Vertex b) {
    adj_.at(a).erase(b);
    adj_.at(b).erase(a);
  }
  void remove_vertex(Vertex v) {
    for (Vertex n : adj_.at(v)) adj_.at(n).erase(v);
    adj_.erase(v);
  }

  bool has_edge(Vertex a, Vertex b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) > 0;
  }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::set<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const {
    int s = 0;
    for (const auto& [v, nb] : adj_) s += static_cast<int>(nb.size());
    return s / 2;
  }
  int max_degree() const {
    int d = 0;
    for (const auto& [v, nb] : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
  }

  /// Dense copy; ids[i] is the sparse id of dense vertex i.
  Graph compact(std::vector<Vertex>& ids) const {
    ids.clear();
    std::map<Vertex, Vertex> dense;
    for (const auto& [v, nb] : adj_) {
      dense[v] = static_cast<Vertex>(ids.size());
      ids.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& [v, nb] : adj_) {
      for (Vertex n : nb) {
        if (v < n) edges.emplace_back(dense[v], dense[n]);
      }
    }
    return Graph(static_cast<int>(ids.size()), std::move(edges));
  }

  bool is_odd_cycle() const {
    std::vector<Vertex> ids;
    return compact(ids).is_odd_cycle();
  }

  Vertex other_neighbor(Vertex v, Vertex not_this) const {
    for (Vertex n : adj_.at(v)) {
      if (n != not_this) return n;
    }
    throw std::logic_error("vertex " + std::to_string(v) + " has no other neighbor");
  }

 private:
  std::map<Vertex, std::set<Vertex>> adj_;
};

using ColorMap = std::map<Edge, Color>;

inline void check_level(const WorkGraph& g, const ColorMap& colors, const char* where) {
  std::vector<Vertex> ids;
  const Graph dense = g.compact(ids);
  std::map<Vertex, Vertex> back;
  for (std::size_t i = 0; i < ids.size(); ++i) back[ids[i]] = static_cast<Vertex>(i);
  EdgeColoring c;
  Color top = 0;
  for (const auto& [e, col] : colors) {
    c.set(back.at(e.u), back.at(e.v), col);
    top = std::max(top, col);
  }
  c.set_t(top);
  if (top > 4) throw std::logic_error(std::string(where) + ": more than 4 colors");
  if (auto bad = find_violation(dense, c)) {
    throw std::logic_error(std::string(where) + ": splice broke the coloring: " + describe(*bad));
  }
}

inline Color color_at(const ColorMap& colors, Vertex a, Vertex b) { return colors.at(Edge(a, b)); }

/// Colors on edges at v, excluding edges to the listed vertices.
inline std::vector<Color> outside_colors(const WorkGraph& g, const ColorMap& colors, Vertex v,
                                         std::initializer_list<Vertex> skip) {
  std::vector<Color> out;
  for (Vertex n : g.neighbors(v)) {
    if (std::find(skip.begin(), skip.end(), n) != skip.end()) continue;
    out.push_back(color_at(colors, v, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool local_interval(std::vector<Color> cs) {
  std::sort(cs.begin(), cs.end());
  for (std::size_t i = 1; i < cs.size(); ++i) {
    if (cs[i] != cs[i - 1] + 1) return false;
  }
  return true;
}

inline ColorMap color_recursive(WorkGraph g, std::vector<ReductionStep>& trace);

inline ColorMap base_even_cycle(const WorkGraph& g, std::vector<ReductionStep>& trace) {
  std::vector<Vertex> ids;
  const Graph dense = g.compact(ids);
  if (dense.is_odd_cycle()) throw std::logic_error("odd cycle reached the even-cycle base case");
  trace.push_back({ReductionCase::kBaseEvenCycle, g.edge_count(), {}, {}, {}, {}, {}});
  ColorMap out;
  Vertex prev = ids.front();
  Vertex cur = *g.neighbors(prev).begin();
  Color c = 1;
  out[Edge(prev, cur)] = c;
  while (cur != ids.front()) {
    const Vertex next = g.other_neighbor(cur, prev);
    c = 3 - c;
    out[Edge(cur, next)] = c;
    prev = cur;
    cur = next;
  }
  return out;
}

inline ColorMap base_small(const WorkGraph& g, std::vector<ReductionStep>& trace) {
  std::vector<Vertex> ids;
  const Graph dense = g.compact(ids);
  trace.push_back({ReductionCase::kBaseSmall, g.edge_count(), {}, {}, {}, {}, {}});
  for (int t = dense.max_degree(); t <= 4; ++t) {
    if (auto found = find_interval_coloring(dense, t)) {
      ColorMap out;
      for (const auto& [e, c] : found->assignment()) {
        out[Edge(ids[static_cast<std::size_t>(e.u)], ids[static_cast<std::size_t>(e.v)])] = c;
      }
      return out;
    }
  }
  throw std::logic_error("small base graph has no interval coloring with at most 4 colors");
}

inline ColorMap pair_case(WorkGraph g, const PairConfig& p, std::vector<ReductionStep>& trace) {
  const auto [u, v, x, y] = p;
  const int before = g.edge_count();
  if (!g.has_edge(x, y)) {
    trace.push_back({ReductionCase::kPairNewEdge, before, u, v, {}, x, y});
    WorkGraph h = g;
    h.remove_vertex(u);
    h.remove_vertex(v);
    h.add_edge(x, y);
    if (h.edge_count() >= before) throw std::logic_error("reduction did not shrink the graph");
    if (h.is_odd_cycle()) throw std::logic_error("pair reduction produced an odd cycle");
    ColorMap colors = color_recursive(h, trace);
    const Color a = color_at(colors, x, y);
    colors.erase(Edge(x, y));
    if (a == 1) {
      colors[Edge(u, x)] = colors[Edge(v, y)] = 1;
      colors[Edge(u, v)] = 2;
    } else {
      colors[Edge(u, x)] = colors[Edge(v, y)] = a;
      colors[Edge(u, v)] = a - 1;
    }
    check_level(g, colors, "pair-new-edge");
    return colors;
  }

  if (g.degree(x) != 3 || g.degree(y) != 3) {
    throw std::logic_error("pair with existing edge xy: outside neighbors must have degree 3");
  }
  WorkGraph h = g;
  h.remove_vertex(u);
  h.remove_vertex(v);
  if (h.edge_count() >= before) throw std::logic_error("reduction did not shrink the graph");

  ColorMap colors;
  if (h.is_odd_cycle()) {
    trace.push_back({ReductionCase::kPairOddCycle, before, u, v, {}, x, y});
    colors[Edge(x, y)] = 3;
    Vertex prev = x;
    Vertex cur = h.other_neighbor(x, y);
    Color c = 1;
    colors[Edge(prev, cur)] = c;
    while (cur != y) {
      const Vertex next = h.other_neighbor(cur, prev);
      c = 3 - c;
      colors[Edge(cur, next)] = c;
      prev = cur;
      cur = next;
    }
    colors[Edge(u, x)] = 2;
    colors[Edge(u, v)] = 3;
    colors[Edge(v, y)] = 4;
    check_level(g, colors, "pair-odd-cycle");
    return colors;
  }

  trace.push_back({ReductionCase::kPairExistingEdge, before, u, v, {}, x, y});
  colors = color_recursive(h, trace);
  const auto sx = outside_colors(h, colors, x, {});
  const auto sy = outside_colors(h, colors, y, {});
  if (sx.size() != 2 || sy.size() != 2) throw std::logic_error("outside neighbors must have degree 2 after removal");
  if (sx == sy) {
    const Color c = sx.front();
    if (c == 1) {
      colors[Edge(u, x)] = colors[Edge(v, y)] = 3;
      colors[Edge(u, v)] = 2;
    } else {
      colors[Edge(u, x)] = colors[Edge(v, y)] = c - 1;
      colors[Edge(u, v)] = c;
    }
  } else {
    // The palettes share the color of xy, so together they span three colors.
    const Color c = std::min(sx.front(), sy.front());
    bool placed = false;
    for (bool swap : {false, true}) {
      const Vertex px = swap ? y : x, py = swap ? x : y;
      const Vertex pu = swap ? v : u, pv = swap ? u : v;
      const auto& lower = swap ? sy : sx;
      if (lower.front() != c) continue;
      colors[Edge(pu, px)] = c + 2;
      colors[Edge(pu, pv)] = c + 1;
      colors[Edge(pv, py)] = c;
      placed = true;
      break;
    }
    if (!placed) throw std::logic_error("pair palettes do not form a 3-interval");
  }
  check_level(g, colors, "pair-existing-edge");
  return colors;
}

inline ColorMap triangle_case(WorkGraph g, const TriangleConfig& tc, std::vector<ReductionStep>& trace) {
  const auto [u, v, w] = tc;
  const int before = g.edge_count();
  Vertex a = -1, b = -1;
  for (Vertex n : g.neighbors(u)) {
    if (n != v && n != w) a = n;
  }
  for (Vertex n : g.neighbors(w)) {
    if (n != v && n != u) b = n;
  }
  if (a < 0 || b < 0) throw std::logic_error("triangle corners need an outside neighbor");
  if (a == b) throw std::logic_error("triangle contraction would create a multi-edge");

  // Contract u, v, w into u.
  WorkGraph h = g;
  h.remove_vertex(v);
  h.remove_vertex(w);
  if (h.has_edge(u, b)) throw std::logic_error("triangle contraction would create a multi-edge");
  h.add_edge(u, b);
  if (h.edge_count() >= before) throw std::logic_error("reduction did not shrink the graph");

  ColorMap colors;
  if (h.is_odd_cycle()) {
    trace.push_back({ReductionCase::kTriangleOddCycle, before, u, v, w, a, b});
    colors[Edge(u, w)] = 3;
    colors[Edge(u, a)] = 4;
    Vertex prev = u;
    Vertex cur = a;
    Color c = 3;
    while (cur != w) {
      const Vertex next = g.other_neighbor(cur, prev);
      colors[Edge(cur, next)] = c;
      c = c == 3 ? 2 : 3;
      prev = cur;
      cur = next;
    }
    colors[Edge(u, v)] = 2;
    colors[Edge(v, w)] = 1;
    check_level(g, colors, "triangle-odd-cycle");
    return colors;
  }

  trace.push_back({ReductionCase::kTriangle, before, u, v, w, a, b});
  ColorMap sub = color_recursive(h, trace);
  const Color ca = color_at(sub, u, a);
  const Color cb = color_at(sub, u, b);
  colors = sub;
  colors.erase(Edge(u, b));
  colors[Edge(w, b)] = cb;
  const Color c = std::min(ca, cb);
  if (std::max(ca, cb) != c + 1) throw std::logic_error("contracted vertex palette is not an interval");
  const Color base = c == 1 ? 3 : c - 1;
  const Color pair_lo = c == 1 ? 1 : c, pair_hi = pair_lo + 1;
  colors[Edge(u, w)] = base;
  bool placed = false;
  for (auto [at_u, at_w] : {std::pair{pair_lo, pair_hi}, std::pair{pair_hi, pair_lo}}) {
    if (local_interval({ca, base, at_u}) && local_interval({cb, base, at_w}) && at_u != ca &&
        at_w != cb) {
      colors[Edge(u, v)] = at_u;
      colors[Edge(v, w)] = at_w;
      placed = true;
      break;
    }
  }
  if (!placed) throw std::logic_error("no orientation of the triangle apex edges fits");
  check_level(g, colors, "triangle");
  return colors;
}

inline ColorMap color_recursive(WorkGraph g, std::vector<ReductionStep>& trace) {
  if (g.max_degree() <= 2) return base_even_cycle(g, trace);
  if (g.edge_count() <= 5) return base_small(g, trace);
  std::vector<Vertex> ids;
  const Graph dense = g.compact(ids);
  const Lemma1Config cfg = find_lemma1_config(dense);
  auto id = [&](Vertex d) { return ids[static_cast<std::size_t>(d)]; };
  if (const auto* p = std::get_if<PairConfig>(&cfg)) {
    return pair_case(g, PairConfig{id(p->u), id(p->v), id(p->x), id(p->y)}, trace);
  }
  const auto& t = std::get<TriangleConfig>(cfg);
  return triangle_case(g, TriangleConfig{id(t.u), id(t.v), id(t.w)}, trace);
}

inline std::vector<Edge> require_subcubic_outerplanar(const Graph& g, bool allow_cycle) {
  const Recognition r = recognize_outerplanar_2connected(g);
  if (const auto* rej = std::get_if<Rejection>(&r)) {
    throw PreconditionError(std::string("not 2-connected outerplanar: ") + to_string(rej->reason) +
                            " (" + rej->detail + ")");
  }
  if (g.max_degree() > 3) throw PreconditionError("maximum degree exceeds 3");
  if (!allow_cycle && g.max_degree() != 3) throw PreconditionError("maximum degree must be 3");
  if (g.is_odd_cycle()) throw PreconditionError("odd cycles have no interval coloring");
  return std::get<OuterEmbedding>(r).chords;
}

}  // namespace detail

/// Interval coloring with at most 4 colors of a 2-connected outerplanar graph
/// with maximum degree <= 3 that is not an odd cycle. Throws
/// PreconditionError otherwise. When `trace` is given, it receives the
/// reduction steps outermost first.
inline EdgeColoring color_subcubic_le4(const Graph& g, std::vector<ReductionStep>* trace = nullptr) {
  detail::require_subcubic_outerplanar(g, true);
  std::vector<ReductionStep> steps;
  const detail::ColorMap colors = detail::color_recursive(detail::WorkGraph(g), steps);
  EdgeColoring out;
  for (const auto& [e, c] : colors) out.set(e, c);
  out.set_t(out.max_color());
  if (auto bad = find_violation(g, out)) throw std::logic_error("construction failed: " + describe(*bad));
  if (trace) *trace = std::move(steps);
  return out;
}

/// Interval 3-coloring of an even-order graph: outer cycle alternating 1, 2
/// from the canonical first edge, every chord 3.
inline EdgeColoring color_even_hamiltonian(const Graph& g, const OuterEmbedding& emb) {
  if (g.vertex_count() % 2 != 0) throw PreconditionError("vertex count must be even");
  if (g.max_degree() != 3) throw PreconditionError("maximum degree must be 3");
  if (auto bad = verify_embedding(g, emb)) throw PreconditionError("invalid embedding: " + bad->detail);
  const auto cycle = outer_cycle(emb);
  EdgeColoring out(3);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    out.set(cycle[i], cycle[(i + 1) % cycle.size()], i % 2 == 0 ? 1 : 2);
  }
  for (const Edge& e : emb.chords) out.set(e, 3);
  if (auto bad = find_violation(g, out)) throw std::logic_error("construction failed: " + describe(*bad));
  return out;
}

struct OptimalColoring {
  int w;
  EdgeColoring coloring;
};

/// Minimum-width interval coloring of a 2-connected outerplanar graph with
/// maximum degree 3: width 3 at even order, 4 at odd order.
inline OptimalColoring color_optimal_subcubic(const Graph& g) {
  detail::require_subcubic_outerplanar(g, false);
  if (g.vertex_count() % 2 == 0) {
    const auto emb = std::get<OuterEmbedding>(recognize_outerplanar_2connected(g));
    return {3, color_even_hamiltonian(g, emb)};
  }
  EdgeColoring c = color_subcubic_le4(g);
  // With 3 colors every vertex palette would contain 2, making the color-2
  // edges a perfect matching, which odd order rules out.
  if (c.t() != 4) throw std::logic_error("odd-order construction did not use 4 colors");
  return {4, std::move(c)};
}

}  // namespace intcol
