#include <gtest/gtest.h>

#include <random>

#include "intcol/fan.hpp"
#include "intcol/generators.hpp"
#include "intcol/solver.hpp"
#include "oracles.hpp"

namespace intcol {
namespace {

using namespace std::chrono_literals;

Graph diamond() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }
Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }
Graph star3() { return make_graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

std::optional<int> solver_width(const Graph& g) {
  const ColoringOutcome o = width(g);
  if (const auto* c = std::get_if<Colored>(&o)) return c->t;
  EXPECT_TRUE(std::holds_alternative<NotColorable>(o));
  return std::nullopt;
}

TEST(Precheck, Rejections) {
  EXPECT_THROW(precheck(make_graph(3, {})), std::invalid_argument);
  EXPECT_THROW(precheck(make_graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
  const auto odd = precheck(gen_cycle(5));
  ASSERT_TRUE(odd.has_value());
  EXPECT_TRUE(std::holds_alternative<OddCycle>(odd->certificate));
  EXPECT_FALSE(precheck(gen_cycle(6)).has_value());
}

TEST(ColorBound, Values) {
  EXPECT_EQ(color_bound(gen_cycle(6)), 5);
  EXPECT_EQ(color_bound(gen_triangle_graph(1, 1, 1).graph), 9);
  EXPECT_EQ(color_bound(diamond()), 5);
  EXPECT_EQ(color_bound(path3()), 2);
}

TEST(BfsOrder, CoversEveryEdgeOnce) {
  for (int n = 3; n <= 10; ++n) {
    const Graph g = gen_triangular_fan(n).graph;
    auto order = bfs_edge_order(g);
    std::sort(order.begin(), order.end());
    ASSERT_EQ(static_cast<int>(order.size()), g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) EXPECT_EQ(order[static_cast<std::size_t>(i)], i);
  }
}

TEST(Search, C4) {
  const auto two = find_interval_coloring(gen_cycle(4), 2);
  ASSERT_TRUE(two.has_value());
  EXPECT_TRUE(is_interval_coloring(gen_cycle(4), *two));
  // 1,2,3,2 around the cycle.
  EXPECT_TRUE(find_interval_coloring(gen_cycle(4), 3).has_value());
  EXPECT_EQ(oracle::count_interval_colorings(gen_cycle(4), 3), 4u);
  EXPECT_FALSE(find_interval_coloring(gen_cycle(4), 4).has_value());
  EXPECT_EQ(oracle::count_interval_colorings(gen_cycle(4), 4), 0u);
}

TEST(Search, TriangularFanThree) {
  const Graph g = gen_triangular_fan(3).graph;
  const auto c = find_interval_coloring(g, 3);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_interval_coloring(g, *c));
  EXPECT_EQ(c->t(), 3);
}

TEST(Search, ImpossibleTQuick) {
  EXPECT_FALSE(find_interval_coloring(gen_cycle(4), 1).has_value());
  EXPECT_FALSE(find_interval_coloring(gen_cycle(4), 5).has_value());
  EXPECT_FALSE(find_interval_coloring(gen_cycle(4), 0).has_value());
}

TEST(Search, ExistenceMatchesBruteForce) {
  std::vector<Graph> graphs{gen_cycle(4), gen_cycle(6), diamond(), path3(), star3(),
                            gen_triangular_fan(3).graph, make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})};
  for (const Graph& g : oracle::subcubic_outerplanar_up_to(7)) graphs.push_back(g);
  for (const Graph& g : graphs) {
    for (int t = 1; t <= g.edge_count(); ++t) {
      const auto c = find_interval_coloring(g, t);
      EXPECT_EQ(c.has_value(), oracle::count_interval_colorings(g, t) > 0);
      if (c) {
        std::vector<int> colors;
        for (const Edge& e : g.edges()) colors.push_back(c->at(e));
        EXPECT_TRUE(oracle::is_interval(g, colors, t));
      }
    }
  }
}

TEST(Width, Examples) {
  EXPECT_EQ(solver_width(gen_cycle(4)), 2);
  EXPECT_EQ(solver_width(gen_cycle(6)), 2);
  EXPECT_EQ(solver_width(diamond()), 3);
  EXPECT_EQ(solver_width(path3()), 2);
  EXPECT_EQ(solver_width(star3()), 3);
  // Path on 5 vertices: width 2 (1,2,1,2).
  EXPECT_EQ(solver_width(make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})), 2);
  EXPECT_FALSE(solver_width(gen_cycle(5)).has_value());
}

TEST(Width, AgreesWithBruteForce) {
  for (const Graph& g : oracle::subcubic_outerplanar_up_to(7)) {
    if (g.is_odd_cycle()) continue;
    EXPECT_EQ(solver_width(g), oracle::brute_width(g));
  }
  EXPECT_EQ(solver_width(gen_triangular_fan(3).graph), oracle::brute_width(gen_triangular_fan(3).graph));
  EXPECT_EQ(solver_width(diamond()), oracle::brute_width(diamond()));
}

TEST(Width, ColoringIsValidAndUsesW) {
  for (int n = 4; n <= 10; ++n) {
    const Graph g = gen_random_outerplanar_subcubic(n, 1);
    const ColoringOutcome o = width(g);
    ASSERT_TRUE(std::holds_alternative<Colored>(o));
    const auto& c = std::get<Colored>(o);
    EXPECT_EQ(c.coloring.t(), c.t);
    EXPECT_TRUE(is_interval_coloring(g, c.coloring));
  }
}

TEST(Width, InvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (int n = 4; n <= 10; ++n) {
    const Graph g = gen_random_outerplanar_subcubic(n, static_cast<std::uint64_t>(n) * 3);
    const auto w = solver_width(g);
    for (int r = 0; r < 3; ++r) EXPECT_EQ(solver_width(g.relabeled(oracle::random_permutation(n, rng))), w);
  }
  const Graph t = gen_triangle_graph(1, 1, 1).graph;
  for (int r = 0; r < 3; ++r) EXPECT_FALSE(solver_width(t.relabeled(oracle::random_permutation(6, rng))).has_value());
}

TEST(Width, ExhaustionReportsRange) {
  const ColoringOutcome o = width(gen_triangle_graph(1, 1, 1).graph);
  ASSERT_TRUE(std::holds_alternative<NotColorable>(o));
  const auto& cert = std::get<NotColorable>(o).certificate;
  ASSERT_TRUE(std::holds_alternative<ExhaustedAllT>(cert));
  EXPECT_EQ(std::get<ExhaustedAllT>(cert).t_min, 4);
  EXPECT_EQ(std::get<ExhaustedAllT>(cert).t_max, 9);
}

TEST(Width, BudgetGivesInconclusive) {
  const ColoringOutcome o = width(gen_triangle_graph(4, 4, 4).graph, 0ms);
  ASSERT_TRUE(std::holds_alternative<Inconclusive>(o));
  EXPECT_GE(std::get<Inconclusive>(o).t, 4);
}

TEST(Search, RequiredPalettes) {
  const Graph g = gen_cycle(4);
  SearchOptions opts;
  opts.required_palettes[0] = {2, 3};
  const SearchResult r = search_interval_coloring(g, 4, opts);
  // C4 has no interval 4-coloring at all.
  EXPECT_EQ(r.status, SearchStatus::kExhausted);

  const Graph p = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  opts.required_palettes.clear();
  opts.required_palettes[1] = {2, 3};
  const SearchResult q = search_interval_coloring(p, 3, opts);
  ASSERT_EQ(q.status, SearchStatus::kFound);
  EXPECT_EQ(palette(p, *q.coloring, 1).colors, (std::vector<Color>{2, 3}));
  EXPECT_TRUE(is_interval_coloring(p, *q.coloring));

  opts.required_palettes[1] = {1, 3};
  EXPECT_EQ(search_interval_coloring(p, 3, opts).status, SearchStatus::kExhausted);
  opts.required_palettes[1] = {2};
  EXPECT_EQ(search_interval_coloring(p, 3, opts).status, SearchStatus::kExhausted);
}

TEST(Search, AcceptResumesSearch) {
  const Graph p = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  int calls = 0;
  SearchOptions opts;
  opts.accept = [&](const EdgeColoring& c) {
    ++calls;
    return c.at(0, 1) == 3;
  };
  const SearchResult r = search_interval_coloring(p, 3, opts);
  ASSERT_EQ(r.status, SearchStatus::kFound);
  EXPECT_EQ(r.coloring->at(0, 1), 3);
  EXPECT_GT(calls, 1);
  opts.accept = [](const EdgeColoring&) { return false; };
  EXPECT_EQ(search_interval_coloring(p, 3, opts).status, SearchStatus::kExhausted);
}

TEST(Search, FirstEdgeSymmetryDoesNotLoseSolutions) {
  // Every found coloring is at most ceil(t/2) on the first edge, yet
  // existence still matches brute force above; check the bound directly.
  for (int n = 3; n <= 6; ++n) {
    const Graph g = gen_triangular_fan(n).graph;
    const auto c = find_interval_coloring(g, g.max_degree());
    ASSERT_TRUE(c.has_value());
    EXPECT_LE(c->at(g.edge(bfs_edge_order(g).front())), (g.max_degree() + 1) / 2);
  }
}

}  // namespace
}  // namespace intcol
