#pragma once
/**
 * Recognition of 2-connected outerplanar graphs.
 *
 * Recognition reduces the graph by repeatedly deleting the lowest-id
 * degree-2 vertex (adding the edge between its two neighbors if absent),
 * replays the deletions in reverse to rebuild a cyclic vertex order, and then
 * verifies that order: consecutive vertices must be adjacent and the
 * remaining edges (chords) must be pairwise non-crossing. The reduction alone
 * can produce nonsense on non-outerplanar input; only the final verification
 * makes an acceptance sound.
 */

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "intcol/graph.hpp"

namespace intcol {

/// Outer face of a 2-connected outerplanar graph: a Hamiltonian cycle given
/// as a cyclic vertex order, plus the remaining (internal) edges.
struct OuterEmbedding {
  std::vector<Vertex> order;
  std::vector<Edge> chords;  // sorted

  friend bool operator==(const OuterEmbedding&, const OuterEmbedding&) = default;
};

enum class RejectReason {
  kTooSmall,
  kDisconnected,
  kTooManyEdges,
  kNotTwoConnected,
  kNoDegreeTwoVertex,
  kOrderNotHamiltonian,
  kCrossingChords,
};

inline const char* to_string(RejectReason r) {
  switch (r) {
    case RejectReason::kTooSmall: return "too-small";
    case RejectReason::kDisconnected: return "disconnected";
    case RejectReason::kTooManyEdges: return "too-many-edges";
    case RejectReason::kNotTwoConnected: return "not-2-connected";
    case RejectReason::kNoDegreeTwoVertex: return "no-degree-2-vertex";
    case RejectReason::kOrderNotHamiltonian: return "order-not-hamiltonian";
    case RejectReason::kCrossingChords: return "crossing-chords";
  }
  return "unknown";
}

struct Rejection {
  RejectReason reason;
  std::string detail;
};

using Recognition = std::variant<OuterEmbedding, Rejection>;

namespace detail {

// Chords (a,b), (c,d) cross iff exactly one of c, d lies strictly between a and b
// along the cycle, with no shared endpoint.
inline bool crosses(const std::vector<int>& pos, Edge a, Edge b) {
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  int lo = pos[static_cast<std::size_t>(a.u)], hi = pos[static_cast<std::size_t>(a.v)];
  if (lo > hi) std::swap(lo, hi);
  const int p = pos[static_cast<std::size_t>(b.u)], q = pos[static_cast<std::size_t>(b.v)];
  const bool p_in = lo < p && p < hi;
  const bool q_in = lo < q && q < hi;
  return p_in != q_in;
}

}  // namespace detail

/// Checks every OuterEmbedding invariant against g; returns the failure.
inline std::optional<Rejection> verify_embedding(const Graph& g, const OuterEmbedding& emb) {
  const int n = g.vertex_count();
  if (static_cast<int>(emb.order.size()) != n || n < 3) {
    return Rejection{RejectReason::kOrderNotHamiltonian, "order does not list every vertex once"};
  }
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const Vertex v = emb.order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[static_cast<std::size_t>(v)] != -1) {
      return Rejection{RejectReason::kOrderNotHamiltonian, "order is not a permutation"};
    }
    pos[static_cast<std::size_t>(v)] = i;
  }
  std::set<Edge> cycle;
  for (int i = 0; i < n; ++i) {
    const Edge e(emb.order[static_cast<std::size_t>(i)],
                 emb.order[static_cast<std::size_t>((i + 1) % n)]);
    if (!g.has_edge(e.u, e.v)) {
      return Rejection{RejectReason::kOrderNotHamiltonian,
                       "consecutive vertices " + std::to_string(e.u) + " and " +
                           std::to_string(e.v) + " are not adjacent"};
    }
    cycle.insert(e);
  }
  std::vector<Edge> chords;
  for (const Edge& e : g.edges()) {
    if (!cycle.count(e)) chords.push_back(e);
  }
  if (chords != emb.chords) {
    return Rejection{RejectReason::kOrderNotHamiltonian, "chord set does not complement the cycle"};
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (detail::crosses(pos, chords[i], chords[j])) {
        return Rejection{RejectReason::kCrossingChords,
                         "chords (" + std::to_string(chords[i].u) + "," + std::to_string(chords[i].v) +
                             ") and (" + std::to_string(chords[j].u) + "," +
                             std::to_string(chords[j].v) + ") cross"};
      }
    }
  }
  return std::nullopt;
}

/// Rotates the order to start at vertex 0, heading toward its smaller cycle neighbor.
inline std::vector<Vertex> canonical_cycle(std::vector<Vertex> order) {
  if (order.empty()) return order;
  auto it = std::find(order.begin(), order.end(), 0);
  std::rotate(order.begin(), it, order.end());
  if (order.size() > 2 && order[1] > order.back()) std::reverse(order.begin() + 1, order.end());
  return order;
}

inline Recognition recognize_outerplanar_2connected(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 2) return Rejection{RejectReason::kTooSmall, "fewer than 3 vertices"};
  if (!g.is_connected()) return Rejection{RejectReason::kDisconnected, "graph is disconnected"};
  if (g.edge_count() > 2 * n - 3) {
    return Rejection{RejectReason::kTooManyEdges,
                     std::to_string(g.edge_count()) + " edges exceed 2n-3 = " + std::to_string(2 * n - 3)};
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) {
      return Rejection{RejectReason::kNotTwoConnected, "vertex " + std::to_string(v) + " has degree below 2"};
    }
  }

  std::vector<std::set<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].insert(e.v);
    adj[static_cast<std::size_t>(e.v)].insert(e.u);
  }
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  struct Insertion {
    Vertex v, x, y;
  };
  std::vector<Insertion> log;

  for (int remaining = n; remaining > 3; --remaining) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[static_cast<std::size_t>(v)] && adj[static_cast<std::size_t>(v)].size() == 2) {
        pick = v;
        break;
      }
    }
    if (pick < 0) {
      return Rejection{RejectReason::kNoDegreeTwoVertex,
                       "reduction stalled with " + std::to_string(remaining) + " vertices left"};
    }
    const Vertex x = *adj[static_cast<std::size_t>(pick)].begin();
    const Vertex y = *adj[static_cast<std::size_t>(pick)].rbegin();
    adj[static_cast<std::size_t>(x)].erase(pick);
    adj[static_cast<std::size_t>(y)].erase(pick);
    adj[static_cast<std::size_t>(pick)].clear();
    alive[static_cast<std::size_t>(pick)] = 0;
    adj[static_cast<std::size_t>(x)].insert(y);
    adj[static_cast<std::size_t>(y)].insert(x);
    log.push_back({pick, x, y});
  }

  std::vector<Vertex> order;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[static_cast<std::size_t>(v)]) order.push_back(v);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!adj[static_cast<std::size_t>(order[i])].count(order[(i + 1) % 3])) {
      return Rejection{RejectReason::kOrderNotHamiltonian, "reduction did not end at a triangle"};
    }
  }

  for (auto it = log.rbegin(); it != log.rend(); ++it) {
    const auto px = std::find(order.begin(), order.end(), it->x) - order.begin();
    const auto py = std::find(order.begin(), order.end(), it->y) - order.begin();
    const auto size = static_cast<std::ptrdiff_t>(order.size());
    if ((px + 1) % size == py) {
      order.insert(order.begin() + px + 1, it->v);
    } else if ((py + 1) % size == px) {
      order.insert(order.begin() + py + 1, it->v);
    } else {
      return Rejection{RejectReason::kOrderNotHamiltonian,
                       "vertices " + std::to_string(it->x) + " and " + std::to_string(it->y) +
                           " are not consecutive when reinserting " + std::to_string(it->v)};
    }
  }

  OuterEmbedding emb;
  emb.order = canonical_cycle(std::move(order));
  std::set<Edge> cycle;
  for (std::size_t i = 0; i < emb.order.size(); ++i) {
    cycle.emplace(emb.order[i], emb.order[(i + 1) % emb.order.size()]);
  }
  for (const Edge& e : g.edges()) {
    if (!cycle.count(e)) emb.chords.push_back(e);
  }
  if (auto bad = verify_embedding(g, emb)) return *bad;
  return emb;
}

inline bool is_outerplanar_2connected(const Graph& g) {
  return std::holds_alternative<OuterEmbedding>(recognize_outerplanar_2connected(g));
}

/// The outer (Hamiltonian) cycle in canonical form.
inline std::vector<Vertex> outer_cycle(const OuterEmbedding& emb) { return canonical_cycle(emb.order); }

/// Edges not on the outer face, i.e. the chords.
inline std::vector<Edge> internal_edges(const Graph& g, const OuterEmbedding& emb) {
  std::vector<Edge> out;
  for (const Edge& e : emb.chords) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("embedding does not belong to graph");
    out.push_back(e);
  }
  return out;
}

/// Bounded faces as vertex cycles, obtained by splitting the outer polygon at chords.
inline std::vector<std::vector<Vertex>> bounded_faces(const OuterEmbedding& emb) {
  std::vector<std::vector<Vertex>> faces;
  std::vector<std::vector<Vertex>> work{emb.order};
  while (!work.empty()) {
    std::vector<Vertex> poly = std::move(work.back());
    work.pop_back();
    const auto k = poly.size();
    bool split = false;
    for (const Edge& c : emb.chords) {
      const auto a = std::find(poly.begin(), poly.end(), c.u);
      const auto b = std::find(poly.begin(), poly.end(), c.v);
      if (a == poly.end() || b == poly.end()) continue;
      auto i = static_cast<std::size_t>(a - poly.begin());
      auto j = static_cast<std::size_t>(b - poly.begin());
      if (i > j) std::swap(i, j);
      if (j - i == 1 || (i == 0 && j == k - 1)) continue;  // already a side of this polygon
      std::vector<Vertex> left(poly.begin() + static_cast<std::ptrdiff_t>(i),
                               poly.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      std::vector<Vertex> right(poly.begin() + static_cast<std::ptrdiff_t>(j), poly.end());
      right.insert(right.end(), poly.begin(), poly.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      work.push_back(std::move(left));
      work.push_back(std::move(right));
      split = true;
      break;
    }
    if (!split) faces.push_back(std::move(poly));
  }
  return faces;
}

using Triple = std::array<Vertex, 3>;

/// Triangular bounded faces whose three sides are all chords, sorted.
inline std::vector<Triple> separating_triangles(const Graph& g, const OuterEmbedding& emb) {
  const auto chords = internal_edges(g, emb);
  auto is_chord = [&](Vertex a, Vertex b) {
    return std::binary_search(chords.begin(), chords.end(), Edge(a, b));
  };
  std::vector<Triple> out;
  for (const auto& face : bounded_faces(emb)) {
    if (face.size() != 3) continue;
    if (is_chord(face[0], face[1]) && is_chord(face[1], face[2]) && is_chord(face[0], face[2])) {
      Triple t{face[0], face[1], face[2]};
      std::sort(t.begin(), t.end());
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Adjacent degree-2 vertices u, v; x is u's other neighbor, y is v's.
struct PairConfig {
  Vertex u, v, x, y;
  friend bool operator==(const PairConfig&, const PairConfig&) = default;
};

/// Mutually adjacent u, v, w with d(u) = d(w) = 3 and d(v) = 2.
struct TriangleConfig {
  Vertex u, v, w;
  friend bool operator==(const TriangleConfig&, const TriangleConfig&) = default;
};

using Lemma1Config = std::variant<PairConfig, TriangleConfig>;

/**
 * Reduction configuration guaranteed in every 2-connected outerplanar graph
 * with maximum degree 3. A pair is preferred over a triangle; ties go to the
 * lexicographically smallest ids. Throws std::logic_error if none exists,
 * which means the caller passed a graph outside that class.
 */
inline Lemma1Config find_lemma1_config(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) != 2 || g.degree(e.v) != 2) continue;
    const auto un = g.neighbors(e.u);
    const auto vn = g.neighbors(e.v);
    const Vertex x = un[0] == e.v ? un[1] : un[0];
    const Vertex y = vn[0] == e.u ? vn[1] : vn[0];
    if (x != y) return PairConfig{e.u, e.v, x, y};
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) continue;
    const auto nb = g.neighbors(v);
    if (g.degree(nb[0]) == 3 && g.degree(nb[1]) == 3 && g.has_edge(nb[0], nb[1])) {
      return TriangleConfig{nb[0], v, nb[1]};
    }
  }
  throw std::logic_error("no reduction configuration: graph is not 2-connected outerplanar with max degree 3");
}

}  // namespace intcol
