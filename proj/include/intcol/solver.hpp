#pragma once
/**
 * Exhaustive backtracking search for interval t-colorings.
 *
 * This is the ground truth for the rest of the library: a "no" from width()
 * comes only from scanning every t between the maximum degree and a sound
 * upper bound on t, each scan exhaustive.
 *
 * Edges are assigned in BFS order from vertex 0, so every edge after the
 * first touches an already-colored vertex. Colors are tried in ascending
 * order. A partial assignment is pruned when
 *   - a color repeats at a vertex,
 *   - the colors at a vertex span more than its degree (the final palette is
 *     an interval of exactly d(v) colors containing them),
 *   - a required palette (optional constraint) is violated,
 *   - fewer edges remain than there are unused colors.
 * The first edge is restricted to colors <= ceil(t/2) since c -> t+1-c maps
 * interval colorings to interval colorings; this is disabled when extra
 * constraints are present.
 */

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "intcol/coloring.hpp"
#include "intcol/graph.hpp"
#include "intcol/parity.hpp"

namespace intcol {

using Clock = std::chrono::steady_clock;

struct SearchOptions {
  /// Vertices whose final palette must equal the given set of colors.
  std::map<Vertex, std::vector<Color>> required_palettes;
  /// Extra filter on complete colorings; rejected solutions resume the search.
  std::function<bool(const EdgeColoring&)> accept;
  std::optional<Clock::time_point> deadline;
};

enum class SearchStatus { kFound, kExhausted, kOutOfTime };

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<EdgeColoring> coloring;
  std::uint64_t nodes = 0;
};

/// Edge ids in BFS order from vertex 0 (ascending neighbor order at each vertex).
inline std::vector<int> bfs_edge_order(const Graph& g) {
  std::vector<int> order;
  std::vector<char> listed(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::queue<Vertex> q;
    q.push(root);
    seen[static_cast<std::size_t>(root)] = 1;
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (const auto& inc : g.incident(v)) {
        if (!listed[static_cast<std::size_t>(inc.edge)]) {
          listed[static_cast<std::size_t>(inc.edge)] = 1;
          order.push_back(inc.edge);
        }
        if (!seen[static_cast<std::size_t>(inc.neighbor)]) {
          seen[static_cast<std::size_t>(inc.neighbor)] = 1;
          q.push(inc.neighbor);
        }
      }
    }
  }
  return order;
}

namespace detail {

class IntervalSearch {
 public:
  IntervalSearch(const Graph& g, int t, const SearchOptions& opts)
      : g_(g), t_(t), opts_(opts), order_(bfs_edge_order(g)) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    color_.assign(static_cast<std::size_t>(g.edge_count()), 0);
    lo_.assign(n, 0);
    hi_.assign(n, 0);
    count_.assign(n, 0);
    uses_.assign(static_cast<std::size_t>(t) + 2, 0);
    allowed_.assign(n, {});
    for (const auto& [v, colors] : opts.required_palettes) {
      if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("required palette for unknown vertex");
      auto& mask = allowed_[static_cast<std::size_t>(v)];
      mask.assign(static_cast<std::size_t>(t) + 2, 0);
      for (Color c : colors) {
        if (c >= 1 && c <= t) mask[static_cast<std::size_t>(c)] = 1;
      }
    }
    symmetric_ = opts.required_palettes.empty() && !opts.accept;
  }

  SearchResult run() {
    SearchResult result;
    if (t_ < 1 || g_.max_degree() > t_ || g_.edge_count() < t_) {
      result.status = SearchStatus::kExhausted;
      return result;
    }
    for (const auto& [v, colors] : opts_.required_palettes) {
      if (static_cast<int>(colors.size()) != g_.degree(v)) return result;
    }
    const bool found = descend(0);
    result.nodes = nodes_;
    if (out_of_time_) {
      result.status = SearchStatus::kOutOfTime;
    } else if (found) {
      result.status = SearchStatus::kFound;
      result.coloring = snapshot();
    }
    return result;
  }

 private:
  EdgeColoring snapshot() const {
    EdgeColoring c(t_);
    for (int id = 0; id < g_.edge_count(); ++id) c.set(g_.edge(id), color_[static_cast<std::size_t>(id)]);
    return c;
  }

  bool fits(Vertex v, Color c) const {
    const auto i = static_cast<std::size_t>(v);
    if (!allowed_[i].empty() && !allowed_[i][static_cast<std::size_t>(c)]) return false;
    if (count_[i] == 0) return true;
    const int lo = std::min(lo_[i], c), hi = std::max(hi_[i], c);
    if (hi - lo + 1 > g_.degree(v)) return false;
    for (const auto& inc : g_.incident(v)) {
      if (color_[static_cast<std::size_t>(inc.edge)] == c) return false;
    }
    return true;
  }

  void assign(int id, Color c) {
    const Edge& e = g_.edge(id);
    color_[static_cast<std::size_t>(id)] = c;
    for (Vertex v : {e.u, e.v}) {
      const auto i = static_cast<std::size_t>(v);
      if (count_[i] == 0) {
        lo_[i] = hi_[i] = c;
      } else {
        lo_[i] = std::min(lo_[i], c);
        hi_[i] = std::max(hi_[i], c);
      }
      ++count_[i];
    }
    if (uses_[static_cast<std::size_t>(c)]++ == 0) ++distinct_;
  }

  void unassign(int id) {
    const Edge& e = g_.edge(id);
    const Color c = color_[static_cast<std::size_t>(id)];
    color_[static_cast<std::size_t>(id)] = 0;
    for (Vertex v : {e.u, e.v}) {
      const auto i = static_cast<std::size_t>(v);
      --count_[i];
      if (count_[i] > 0) {
        int lo = t_ + 1, hi = 0;
        for (const auto& inc : g_.incident(v)) {
          const Color x = color_[static_cast<std::size_t>(inc.edge)];
          if (x == 0) continue;
          lo = std::min(lo, x);
          hi = std::max(hi, x);
        }
        lo_[i] = lo;
        hi_[i] = hi;
      }
    }
    if (--uses_[static_cast<std::size_t>(c)] == 0) --distinct_;
  }

  bool descend(std::size_t depth) {
    ++nodes_;
    if (opts_.deadline && (nodes_ & 0xfff) == 0 && Clock::now() > *opts_.deadline) {
      out_of_time_ = true;
    }
    if (out_of_time_) return false;
    if (depth == order_.size()) {
      if (distinct_ != t_) return false;
      return !opts_.accept || opts_.accept(snapshot());
    }
    const int id = order_[depth];
    const Edge& e = g_.edge(id);
    const int remaining_after = static_cast<int>(order_.size() - depth) - 1;

    Color first = 1, last = t_;
    for (Vertex v : {e.u, e.v}) {
      const auto i = static_cast<std::size_t>(v);
      if (count_[i] > 0) {
        first = std::max(first, hi_[i] - g_.degree(v) + 1);
        last = std::min(last, lo_[i] + g_.degree(v) - 1);
      }
    }
    if (depth == 0 && symmetric_) last = std::min(last, (t_ + 1) / 2);

    for (Color c = first; c <= last; ++c) {
      if (!fits(e.u, c) || !fits(e.v, c)) continue;
      const int distinct_after = distinct_ + (uses_[static_cast<std::size_t>(c)] == 0 ? 1 : 0);
      if (t_ - distinct_after > remaining_after) continue;
      assign(id, c);
      if (descend(depth + 1)) return true;
      unassign(id);
      if (out_of_time_) return false;
    }
    return false;
  }

  const Graph& g_;
  int t_;
  const SearchOptions& opts_;
  std::vector<int> order_;
  std::vector<Color> color_;
  std::vector<int> lo_, hi_, count_, uses_;
  std::vector<std::vector<char>> allowed_;
  int distinct_ = 0;
  bool symmetric_ = true;
  bool out_of_time_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline SearchResult search_interval_coloring(const Graph& g, int t, const SearchOptions& opts = {}) {
  return detail::IntervalSearch(g, t, opts).run();
}

/// An interval t-coloring of g, or nullopt if none exists.
inline std::optional<EdgeColoring> find_interval_coloring(const Graph& g, int t) {
  return search_interval_coloring(g, t).coloring;
}

// Outcomes -----------------------------------------------------------------

struct Colored {
  int t;
  EdgeColoring coloring;
};

/// No interval t-coloring for any t in [t_min, t_max].
struct ExhaustedAllT {
  int t_min;
  int t_max;
  std::string soundness;
};

/// Odd cycles need Delta + 1 colors in any proper edge coloring.
struct OddCycle {};

struct NotColorable {
  std::variant<ExhaustedAllT, OddCycle, ParityCertificate> certificate;
};

/// The budget ran out while scanning t.
struct Inconclusive {
  int t;
};

using ColoringOutcome = std::variant<Colored, NotColorable, Inconclusive>;

/// Cheap necessary conditions. Throws std::invalid_argument on disconnected
/// or edgeless input.
inline std::optional<NotColorable> precheck(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("graph has no edges");
  if (!g.is_connected()) throw std::invalid_argument("graph is disconnected");
  if (g.is_odd_cycle()) return NotColorable{OddCycle{}};
  return std::nullopt;
}

/// Sound upper bound on t: |E| always, and |V| - 1 for triangle-free graphs.
inline int color_bound(const Graph& g) {
  if (!g.has_triangle()) return std::min(g.edge_count(), g.vertex_count() - 1);
  return g.edge_count();
}

inline std::string color_bound_reason(const Graph& g) {
  if (!g.has_triangle()) return "triangle-free: t <= |V|-1; every color is used: t <= |E|";
  return "every color is used on some edge: t <= |E| (no tighter bound for graphs with triangles)";
}

/// Least t admitting an interval t-coloring, scanning every t from the
/// maximum degree up to color_bound(g).
inline ColoringOutcome width(const Graph& g, std::optional<std::chrono::milliseconds> budget = std::nullopt) {
  if (auto no = precheck(g)) return *no;
  SearchOptions opts;
  if (budget) opts.deadline = Clock::now() + *budget;
  const int t_min = g.max_degree();
  const int t_max = color_bound(g);
  for (int t = t_min; t <= t_max; ++t) {
    SearchResult r = search_interval_coloring(g, t, opts);
    if (r.status == SearchStatus::kOutOfTime) return Inconclusive{t};
    if (r.status == SearchStatus::kFound) return Colored{t, std::move(*r.coloring)};
  }
  return NotColorable{ExhaustedAllT{t_min, t_max, color_bound_reason(g)}};
}

}  // namespace intcol
