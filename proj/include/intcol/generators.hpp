#pragma once
// Named graph families and the seeded random subcubic outerplanar generator.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "intcol/graph.hpp"

namespace intcol {

inline Graph gen_cycle(int n) {
  if (n < 3) throw GraphError("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

/// Triangular fan TF_n.
///
/// Ids: u = 0, v_i = i for 1 <= i <= n-1, w_i = n-1+i for 1 <= i <= n-2.
/// Edges are u v_i (i <= n-1) and v_i w_i, w_i v_{i+1}, v_i v_{i+1} (i <= n-2).
inline LabeledGraph gen_triangular_fan(int n) {
  if (n < 3) throw GraphError("triangular fan needs n >= 3");
  auto v = [](int i) { return i; };
  auto w = [n](int i) { return n - 1 + i; };
  const int order = 1 + (n - 1) + (n - 2);
  std::vector<Edge> edges;
  for (int i = 1; i <= n - 1; ++i) edges.emplace_back(0, v(i));
  for (int i = 1; i <= n - 2; ++i) {
    edges.emplace_back(v(i), w(i));
    edges.emplace_back(w(i), v(i + 1));
    edges.emplace_back(v(i), v(i + 1));
  }
  LabeledGraph out{Graph(order, std::move(edges)), {}};
  out.labels.set(0, "u");
  for (int i = 1; i <= n - 1; ++i) out.labels.set(v(i), "v" + std::to_string(i));
  for (int i = 1; i <= n - 2; ++i) out.labels.set(w(i), "w" + std::to_string(i));
  return out;
}

/// Triangle graph T_{k,l,m}: triangle xyz whose sides xy, yz, xz are each
/// paralleled by a path through 2k-1, 2l-1, 2m-1 degree-2 vertices.
///
/// Ids: x = 0, y = 1, z = 2, then u_1..u_{2k-1}, v_1..v_{2l-1}, w_1..w_{2m-1}.
inline LabeledGraph gen_triangle_graph(int k, int l, int m) {
  if (k < 1 || l < 1 || m < 1) throw GraphError("triangle graph needs k, l, m >= 1");
  const Vertex x = 0, y = 1, z = 2;
  int next = 3;
  LabeledGraph out;
  std::vector<Edge> edges{{x, y}, {y, z}, {x, z}};
  std::vector<std::pair<std::string, Vertex>> names{{"x", x}, {"y", y}, {"z", z}};

  auto add_path = [&](const char* prefix, int half, Vertex from, Vertex to) {
    const int len = 2 * half - 1;
    const Vertex first = next;
    for (int i = 1; i <= len; ++i) names.emplace_back(prefix + std::to_string(i), next++);
    edges.emplace_back(from, first);
    for (int i = 0; i + 1 < len; ++i) edges.emplace_back(first + i, first + i + 1);
    edges.emplace_back(first + len - 1, to);
  };
  add_path("u", k, x, y);
  add_path("v", l, y, z);
  add_path("w", m, x, z);

  out.graph = Graph(next, std::move(edges));
  for (auto& [name, id] : names) out.labels.set(id, name);
  return out;
}

namespace detail {

// Bounded draw straight from the engine output, so sequences are identical
// across standard library implementations.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

inline bool chords_cross(Edge a, Edge b) {
  // Vertices of the outer cycle are 0..n-1 in order, so ids are positions.
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  const bool b_u_inside = a.u < b.u && b.u < a.v;
  const bool b_v_inside = a.u < b.v && b.v < a.v;
  return b_u_inside != b_v_inside;
}

}  // namespace detail

/// Outer cycle 0..n-1 plus a random set of pairwise non-crossing chords,
/// each vertex touched by at most one chord, at least one chord.
///
/// Candidates are shuffled, a target count is drawn, and candidates are
/// accepted greedily while they respect the crossing and degree constraints.
inline Graph gen_random_outerplanar_subcubic(int n, std::uint64_t seed) {
  if (n < 4) throw GraphError("random outerplanar subcubic graph needs n >= 4");
  std::mt19937_64 rng(seed);

  std::vector<Edge> candidates;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 2; b < n; ++b) {
      if (a == 0 && b == n - 1) continue;
      candidates.emplace_back(a, b);
    }
  }
  for (std::size_t i = candidates.size(); i > 1; --i) {
    std::swap(candidates[i - 1], candidates[detail::draw_below(rng, i)]);
  }

  const int target = 1 + static_cast<int>(detail::draw_below(rng, static_cast<std::uint64_t>(n / 2)));
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<Edge> chords;
  for (const Edge& c : candidates) {
    if (static_cast<int>(chords.size()) >= target) break;
    if (used[static_cast<std::size_t>(c.u)] || used[static_cast<std::size_t>(c.v)]) continue;
    bool ok = true;
    for (const Edge& d : chords) {
      if (detail::chords_cross(c, d)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chords.push_back(c);
    used[static_cast<std::size_t>(c.u)] = used[static_cast<std::size_t>(c.v)] = 1;
  }

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  edges.insert(edges.end(), chords.begin(), chords.end());
  return Graph(n, std::move(edges));
}

}  // namespace intcol
