#include <gtest/gtest.h>

#include <random>

#include "intcol/coloring.hpp"
#include "intcol/fan.hpp"
#include "intcol/generators.hpp"
#include "oracles.hpp"

namespace intcol {
namespace {

std::vector<int> by_id(const Graph& g, const EdgeColoring& c) {
  std::vector<int> out;
  for (const Edge& e : g.edges()) out.push_back(c.at(e));
  return out;
}

EdgeColoring from_ids(const Graph& g, const std::vector<int>& colors, int t) {
  EdgeColoring c(t);
  for (int id = 0; id < g.edge_count(); ++id) c.set(g.edge(id), colors[static_cast<std::size_t>(id)]);
  return c;
}

TEST(Palette, SortedAndInterval) {
  const Graph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EdgeColoring c(3);
  c.set(0, 1, 3);
  c.set(0, 2, 1);
  c.set(0, 3, 2);
  const Palette p = palette(g, c, 0);
  EXPECT_EQ(p.colors, (std::vector<Color>{1, 2, 3}));
  EXPECT_TRUE(p.is_interval());
  EXPECT_FALSE((Palette{0, {1, 3}}).is_interval());
  EXPECT_TRUE((Palette{0, {}}).is_interval());
}

TEST(Validator, C4Alternating) {
  const Graph c4 = gen_cycle(4);
  EdgeColoring c(2);
  c.set(0, 1, 1);
  c.set(1, 2, 2);
  c.set(2, 3, 1);
  c.set(3, 0, 2);
  EXPECT_TRUE(is_interval_coloring(c4, c));
  c.set_t(3);
  const auto v = find_violation(c4, c);
  ASSERT_TRUE(v.has_value());
  ASSERT_TRUE(std::holds_alternative<ColorUnused>(*v));
  EXPECT_EQ(std::get<ColorUnused>(*v).color, 3);
  EXPECT_EQ(describe(*v), "color 3 is not used");
}

TEST(Validator, PathWithGap) {
  // a=0, b=1, c=2; colors 1 and 3 meet at b.
  const Graph p = make_graph(3, {{0, 1}, {1, 2}});
  EdgeColoring c(3);
  c.set(0, 1, 1);
  c.set(1, 2, 3);
  const auto v = find_violation(p, c);
  ASSERT_TRUE(v.has_value());
  ASSERT_TRUE(std::holds_alternative<NotInterval>(*v));
  EXPECT_EQ(std::get<NotInterval>(*v).vertex, 1);
  EXPECT_EQ(std::get<NotInterval>(*v).palette, (std::vector<Color>{1, 3}));
}

TEST(Validator, RepeatedColor) {
  const Graph p = make_graph(3, {{0, 1}, {1, 2}});
  EdgeColoring c(1);
  c.set(0, 1, 1);
  c.set(1, 2, 1);
  const auto v = find_violation(p, c);
  ASSERT_TRUE(v.has_value());
  ASSERT_TRUE(std::holds_alternative<NotProper>(*v));
  EXPECT_EQ(std::get<NotProper>(*v).vertex, 1);
}

TEST(Validator, OutOfRange) {
  const Graph p = make_graph(2, {{0, 1}});
  EdgeColoring c(1);
  c.set(0, 1, 2);
  const auto v = find_violation(p, c);
  ASSERT_TRUE(v.has_value());
  EXPECT_TRUE(std::holds_alternative<ColorOutOfRange>(*v));
  c.set(0, 1, 0);
  EXPECT_TRUE(std::holds_alternative<ColorOutOfRange>(*find_violation(p, c)));
}

TEST(Validator, CoverMismatchThrows) {
  const Graph p = make_graph(3, {{0, 1}, {1, 2}});
  EdgeColoring c(1);
  c.set(0, 1, 1);
  EXPECT_THROW(find_violation(p, c), std::invalid_argument);
  c.set(1, 2, 2);
  c.set(0, 2, 3);
  EXPECT_THROW(find_violation(p, c), std::invalid_argument);
}

TEST(Validator, AgreesWithOracleOnAllSmallAssignments) {
  const std::vector<Graph> graphs{gen_cycle(4), make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}}),
                                  gen_triangular_fan(3).graph};
  for (const Graph& g : graphs) {
    for (int t = 1; t <= 4; ++t) {
      std::vector<int> colors(static_cast<std::size_t>(g.edge_count()), 1);
      while (true) {
        EXPECT_EQ(is_interval_coloring(g, from_ids(g, colors, t)), oracle::is_interval(g, colors, t));
        std::size_t i = 0;
        while (i < colors.size() && colors[i] == t) colors[i++] = 1;
        if (i == colors.size()) break;
        ++colors[i];
      }
    }
  }
}

TEST(Normalize, ShiftsToOne) {
  EdgeColoring c(0);
  c.set(0, 1, 5);
  c.set(1, 2, 6);
  const EdgeColoring n = normalize(c);
  EXPECT_EQ(n.t(), 2);
  EXPECT_EQ(n.at(0, 1), 1);
  EXPECT_EQ(n.at(1, 2), 2);
}

TEST(Normalize, ShiftInvariance) {
  // A valid coloring shifted by s and renormalized is the original.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 28);
    const EdgeColoring c = color_fan(n);
    const Graph g = gen_triangular_fan(n).graph;
    const int s = static_cast<int>(rng() % 50);
    EdgeColoring shifted(c.t() + s);
    for (const auto& [e, col] : c.assignment()) shifted.set(e, col + s);
    EXPECT_EQ(s == 0, is_interval_coloring(g, shifted)) << "colors below 1+s are unused";
    EXPECT_EQ(normalize(shifted), c);
    EXPECT_TRUE(is_interval_coloring(g, normalize(shifted)));
  }
}

TEST(ParityCounts, EvenSizeIsBalanced) {
  for (int size = 0; size <= 12; size += 2) {
    for (int lo = -5; lo <= 20; ++lo) {
      EXPECT_EQ(parity_counts(lo, size), std::make_pair(size / 2, size / 2)) << lo << " " << size;
    }
  }
  EXPECT_EQ(parity_counts(1, 3), std::make_pair(1, 2));
  EXPECT_EQ(parity_counts(2, 3), std::make_pair(2, 1));
}

TEST(Validator, RecoloredEdgeAgreesWithOracle) {
  std::mt19937_64 rng(9);
  for (int n = 3; n <= 15; ++n) {
    const Graph g = gen_triangular_fan(n).graph;
    const EdgeColoring c = color_fan(n);
    std::vector<int> colors = by_id(g, c);
    for (int r = 0; r < 20; ++r) {
      const int a = static_cast<int>(rng() % static_cast<unsigned>(g.edge_count()));
      const int b = static_cast<int>(rng() % static_cast<unsigned>(g.edge_count()));
      std::vector<int> mutated = colors;
      mutated[static_cast<std::size_t>(a)] = colors[static_cast<std::size_t>(b)];
      EXPECT_EQ(is_interval_coloring(g, from_ids(g, mutated, c.t())), oracle::is_interval(g, mutated, c.t()));
    }
  }
}

}  // namespace
}  // namespace intcol
