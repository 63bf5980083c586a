#pragma once
/**
 * Undirected simple graphs over dense vertex ids 0..n-1.
 *
 * A Graph is an immutable value: the edge list is kept sorted by
 * (min, max) endpoint and the edge index in that list is the edge id used
 * throughout the library (colorings, solver state, serialization order).
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intcol {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool touches(Vertex x) const { return x == u || x == v; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Graph {
 public:
  struct Incidence {
    Vertex neighbor;
    int edge;
  };

  Graph() = default;

  /// Throws GraphError on loops, out-of-range endpoints or duplicate edges.
  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw GraphError("negative vertex count");
    for (const Edge& e : edges_) {
      if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v >= n_) {
        throw GraphError("endpoint out of range in edge (" + std::to_string(e.u) + "," +
                         std::to_string(e.v) + ")");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) +
                       ")");
    }
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (int id = 0; id < edge_count(); ++id) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      adj_[static_cast<std::size_t>(e.u)].push_back({e.v, id});
      adj_[static_cast<std::size_t>(e.v)].push_back({e.u, id});
    }
    for (auto& row : adj_) {
      std::sort(row.begin(), row.end(),
                [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
    }
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  /// Incident (neighbor, edge id) pairs in ascending neighbor order.
  const std::vector<Incidence>& incident(Vertex v) const {
    return adj_.at(static_cast<std::size_t>(v));
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const auto& inc : incident(v)) out.push_back(inc.neighbor);
    return out;
  }

  int degree(Vertex v) const { return static_cast<int>(incident(v).size()); }

  int max_degree() const {
    int d = 0;
    for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
  }

  std::optional<int> edge_id(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
    const Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
  }

  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  bool is_connected() const {
    if (n_ == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<Vertex> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (const auto& inc : incident(v)) {
        if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
          seen[static_cast<std::size_t>(inc.neighbor)] = 1;
          ++count;
          q.push(inc.neighbor);
        }
      }
    }
    return count == n_;
  }

  /// Connected, every degree 2, odd order.
  bool is_odd_cycle() const {
    if (n_ < 3 || n_ % 2 == 0 || edge_count() != n_) return false;
    for (Vertex v = 0; v < n_; ++v) {
      if (degree(v) != 2) return false;
    }
    return is_connected();
  }

  bool has_triangle() const {
    for (const Edge& e : edges_) {
      for (const auto& inc : incident(e.u)) {
        if (inc.neighbor != e.v && has_edge(inc.neighbor, e.v)) return true;
      }
    }
    return false;
  }

  /// Graph with vertex v renamed to perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw GraphError("permutation size mismatch");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const Edge& e : edges_) {
      out.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    }
    return Graph(n_, std::move(out));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

inline Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
    edges.emplace_back(a, b);
  }
  return Graph(n, std::move(edges));
}

/// Optional human-readable role names for vertices ("u", "v3", "w2", ...).
class GraphLabels {
 public:
  void set(Vertex v, std::string name) {
    if (by_name_.count(name) && by_name_.at(name) != v) {
      throw GraphError("label '" + name + "' already assigned");
    }
    if (auto it = names_.find(v); it != names_.end()) by_name_.erase(it->second);
    by_name_[name] = v;
    names_[v] = std::move(name);
  }

  std::optional<std::string> name(Vertex v) const {
    auto it = names_.find(v);
    if (it == names_.end()) return std::nullopt;
    return it->second;
  }

  /// Throws std::out_of_range for unknown labels.
  Vertex operator[](const std::string& name) const { return by_name_.at(name); }

  bool contains(const std::string& name) const { return by_name_.count(name) > 0; }
  std::size_t size() const { return names_.size(); }

 private:
  std::map<Vertex, std::string> names_;
  std::map<std::string, Vertex> by_name_;
};

struct LabeledGraph {
  Graph graph;
  GraphLabels labels;
};

}  // namespace intcol
