#pragma once
/**
 * Parity obstruction certificates for graphs built around a triangle with all
 * vertex degrees even (the triangle graphs T_{k,l,m}).
 *
 * In an interval coloring, a vertex of even degree d sees an interval of d
 * colors, hence exactly d/2 even and d/2 odd colors. Among the three triangle
 * edges two share a parity, and any two triangle edges meet at a triangle
 * vertex. A certificate holds one branch per (triangle vertex, parity)
 * assumption; each branch forces edge parities with the balance rule until
 * some edge is forced both ways. The branches together cover every parity
 * pattern of the triangle, so no interval coloring exists.
 */

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "intcol/coloring.hpp"
#include "intcol/generators.hpp"
#include "intcol/graph.hpp"

namespace intcol {

enum class Parity { kEven, kOdd };

inline Parity flip(Parity p) { return p == Parity::kEven ? Parity::kOdd : Parity::kEven; }
inline const char* to_string(Parity p) { return p == Parity::kEven ? "even" : "odd"; }

/// At vertex `at`, the `because` edges (half its degree) share parity, so
/// `edge` has the opposite parity.
struct ParityStep {
  Edge edge;
  Parity parity;
  Vertex at;
  std::vector<Edge> because;
};

struct ParityBranch {
  Vertex vertex;         // triangle vertex whose two triangle edges are assumed equal
  Parity assumed;        // their common parity
  std::vector<ParityStep> steps;  // the last step contradicts an earlier parity
};

struct ParityCertificate {
  std::array<Vertex, 3> triangle;
  std::array<std::string, 3> roles;  // "x", "y", "z" when labels are known
  std::vector<ParityBranch> branches;
};

namespace detail {

inline std::array<Edge, 2> triangle_edges_at(const std::array<Vertex, 3>& tri, int i) {
  const Vertex a = tri[static_cast<std::size_t>(i)];
  const Vertex b = tri[static_cast<std::size_t>((i + 1) % 3)];
  const Vertex c = tri[static_cast<std::size_t>((i + 2) % 3)];
  return {Edge(a, b), Edge(a, c)};
}

inline ParityBranch propagate_branch(const Graph& g, const std::array<Vertex, 3>& tri, int i,
                                     Parity assumed) {
  ParityBranch branch{tri[static_cast<std::size_t>(i)], assumed, {}};
  std::map<Edge, Parity> known;
  for (const Edge& e : triangle_edges_at(tri, i)) known[e] = assumed;

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const int d = g.degree(v);
      if (d % 2 != 0) continue;
      for (Parity q : {Parity::kEven, Parity::kOdd}) {
        std::vector<Edge> same;
        for (const auto& inc : g.incident(v)) {
          const Edge e = g.edge(inc.edge);
          auto it = known.find(e);
          if (it != known.end() && it->second == q && static_cast<int>(same.size()) < d / 2) {
            same.push_back(e);
          }
        }
        if (static_cast<int>(same.size()) < d / 2) continue;
        for (const auto& inc : g.incident(v)) {
          const Edge e = g.edge(inc.edge);
          if (std::find(same.begin(), same.end(), e) != same.end()) continue;
          auto it = known.find(e);
          if (it != known.end() && it->second == flip(q)) continue;
          branch.steps.push_back({e, flip(q), v, same});
          if (it != known.end()) return branch;  // forced both ways
          known[e] = flip(q);
          changed = true;
        }
      }
    }
  }
  throw std::logic_error("parity propagation reached no contradiction");
}

}  // namespace detail

/// Builds the certificate on any graph containing the given triangle.
/// Throws std::logic_error if some branch does not close.
inline ParityCertificate parity_obstruction(const Graph& g, std::array<Vertex, 3> triangle,
                                            std::array<std::string, 3> roles = {"x", "y", "z"}) {
  ParityCertificate cert{triangle, std::move(roles), {}};
  for (int i = 0; i < 3; ++i) {
    for (Parity p : {Parity::kEven, Parity::kOdd}) {
      cert.branches.push_back(detail::propagate_branch(g, triangle, i, p));
    }
  }
  return cert;
}

inline ParityCertificate parity_obstruction(int k, int l, int m) {
  const LabeledGraph t = gen_triangle_graph(k, l, m);
  return parity_obstruction(t.graph, {t.labels["x"], t.labels["y"], t.labels["z"]});
}

/**
 * Replays a certificate against g. Returns the first defect found, or
 * nullopt when every step is justified, every branch ends in a
 * contradiction, and the branch assumptions cover all eight parity patterns
 * of the triangle.
 */
inline std::optional<std::string> check_parity_certificate(const Graph& g, const ParityCertificate& cert) {
  const auto& tri = cert.triangle;
  for (int i = 0; i < 3; ++i) {
    const Vertex a = tri[static_cast<std::size_t>(i)], b = tri[static_cast<std::size_t>((i + 1) % 3)];
    if (!g.has_edge(a, b)) return "certificate triangle is not a triangle of the graph";
  }

  for (std::size_t bi = 0; bi < cert.branches.size(); ++bi) {
    const ParityBranch& br = cert.branches[bi];
    const std::string where = "branch " + std::to_string(bi) + ": ";
    const auto at_vertex = std::find(tri.begin(), tri.end(), br.vertex);
    if (at_vertex == tri.end()) return where + "assumption is not at a triangle vertex";
    std::map<Edge, Parity> known;
    for (const Edge& e : detail::triangle_edges_at(tri, static_cast<int>(at_vertex - tri.begin()))) {
      known[e] = br.assumed;
    }
    if (br.steps.empty()) return where + "no steps";
    for (std::size_t si = 0; si < br.steps.size(); ++si) {
      const ParityStep& s = br.steps[si];
      const std::string step = where + "step " + std::to_string(si) + ": ";
      const int d = g.degree(s.at);
      if (d % 2 != 0) return step + "vertex has odd degree";
      // Even-size intervals split evenly between parities.
      const auto [even, odd] = parity_counts(1, d);
      if (even != d / 2 || odd != d / 2) return step + "unbalanced interval";
      if (!g.has_edge(s.edge.u, s.edge.v) || !s.edge.touches(s.at)) return step + "edge not at vertex";
      if (static_cast<int>(s.because.size()) != d / 2) return step + "premise count is not half the degree";
      std::vector<Edge> seen;
      for (const Edge& p : s.because) {
        if (!s.edge.touches(s.at) || !p.touches(s.at) || !g.has_edge(p.u, p.v)) {
          return step + "premise edge not at vertex";
        }
        if (p == s.edge || std::find(seen.begin(), seen.end(), p) != seen.end()) {
          return step + "premise edges not distinct";
        }
        seen.push_back(p);
        auto it = known.find(p);
        if (it == known.end() || it->second != flip(s.parity)) return step + "premise parity not established";
      }
      auto it = known.find(s.edge);
      const bool last = si + 1 == br.steps.size();
      if (it != known.end() && it->second != s.parity) {
        if (!last) return step + "contradiction before the final step";
        break;
      }
      if (last) return step + "final step is not a contradiction";
      known[s.edge] = s.parity;
    }
  }

  for (int mask = 0; mask < 8; ++mask) {
    // Parities of edges (t0 t1), (t1 t2), (t0 t2).
    std::map<Edge, Parity> pattern;
    pattern[Edge(tri[0], tri[1])] = (mask & 1) ? Parity::kOdd : Parity::kEven;
    pattern[Edge(tri[1], tri[2])] = (mask & 2) ? Parity::kOdd : Parity::kEven;
    pattern[Edge(tri[0], tri[2])] = (mask & 4) ? Parity::kOdd : Parity::kEven;
    bool covered = false;
    for (const ParityBranch& br : cert.branches) {
      const auto idx = static_cast<int>(std::find(tri.begin(), tri.end(), br.vertex) - tri.begin());
      const auto es = detail::triangle_edges_at(tri, idx);
      if (pattern[es[0]] == br.assumed && pattern[es[1]] == br.assumed) {
        covered = true;
        break;
      }
    }
    if (!covered) return "triangle parity pattern " + std::to_string(mask) + " is not covered";
  }
  return std::nullopt;
}

}  // namespace intcol
