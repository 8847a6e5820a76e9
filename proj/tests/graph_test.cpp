#include <gtest/gtest.h>

#include <queue>
#include <random>

#include "test_support.hpp"
#include "treecut/graph.hpp"

namespace treecut {
namespace {

using testing::uniform;

Graph path6() { return generate({.family = Family::Path, .n = 6}).g; }
Graph star4() { return generate({.family = Family::Star, .n = 5}).g; }

// Legs of lengths 4, 3 and 2 around center 0.
Graph uneven_spider() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}, {0, 8}, {8, 9}};
  return Graph::from_edges(10, e);
}

std::vector<int> bfs_dist(const Graph& g, VertexId s) {
  std::vector<int> d(static_cast<std::size_t>(g.num_vertices()), -1);
  std::queue<VertexId> q;
  d[s] = 0;
  q.push(s);
  while (!q.empty()) {
    const VertexId v = q.front();
    q.pop();
    for (VertexId w : g.neighbors(v)) {
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

// Vertex count of a longest path, by trying every pair.
int brute_longest(const Graph& g) {
  int best = 1;
  for (VertexId s = 0; s < g.num_vertices(); ++s) {
    for (int d : bfs_dist(g, s)) best = std::max(best, d + 1);
  }
  return best;
}

bool is_path_in(const Graph& g, const std::vector<VertexId>& p) {
  for (std::size_t k = 1; k < p.size(); ++k) {
    const auto nb = g.neighbors(p[k - 1]);
    if (std::find(nb.begin(), nb.end(), p[k]) == nb.end()) return false;
  }
  std::vector<VertexId> s = p;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

TEST(GraphConstruction, RejectsSelfLoopsParallelEdgesAndBadIds) {
  const std::vector<Edge> loop{{1, 1}}, twice{{0, 1}, {1, 0}}, range{{0, 3}};
  for (const auto* e : {&loop, &twice, &range}) {
    try {
      Graph::from_edges(3, *e);
      FAIL();
    } catch (const Error& err) {
      EXPECT_EQ(err.code(), ErrorCode::InvalidGraph);
    }
  }
}

TEST(GraphConstruction, AdjacencyIsSymmetric) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inst = testing::random_low_width_instance(rng, uniform(rng, 1, 30), 4);
    const Graph& g = inst.g;
    int degree_sum = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      degree_sum += g.degree(v);
      for (VertexId w : g.neighbors(v)) {
        const auto back = g.neighbors(w);
        EXPECT_NE(std::find(back.begin(), back.end(), v), back.end());
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.num_edges());
    EXPECT_EQ(static_cast<int>(g.edges().size()), g.num_edges());
  }
}

TEST(GraphConstruction, InducedSubgraphKeepsListOrder) {
  const Graph g = path6();
  const std::vector<VertexId> keep{4, 2, 3};
  const Graph h = g.induced(keep);
  EXPECT_EQ(h.num_vertices(), 3);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 2}, {1, 2}}));
}

TEST(MaxDegree, Examples) {
  EXPECT_EQ(max_degree(path6()), 2);
  EXPECT_EQ(max_degree(star4()), 4);
  EXPECT_EQ(max_degree(Graph(1)), 0);
}

TEST(CutWidth, Examples) {
  const std::vector<VertexId> b{0, 1, 2};
  EXPECT_EQ(cut_width(path6(), b), 1);
  EXPECT_EQ(cut_width(path6(), Partition::from_classes(6, {{0, 1, 2, 3, 4, 5}})), 0);
  const std::vector<VertexId> leaves{1, 2};
  EXPECT_EQ(cut_width(star4(), leaves), 2);
}

TEST(CutWidth, RejectsNonPartitions) {
  EXPECT_THROW(Partition::from_classes(4, {{0, 1}, {1, 2, 3}}), Error);
  EXPECT_THROW(Partition::from_classes(4, {{0, 1}, {2}}), Error);
  EXPECT_THROW(Partition::from_classes(4, {{0, 1}, {2, 4}}), Error);
}

TEST(CutWidth, SymmetricAndMergingNeverIncreases) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = testing::random_low_width_instance(rng, uniform(rng, 2, 25), 4);
    const Graph& g = inst.g;
    const int n = g.num_vertices();
    std::vector<VertexId> b, w;
    std::vector<std::vector<VertexId>> three(3);
    for (VertexId v = 0; v < n; ++v) {
      (uniform(rng, 0, 1) ? b : w).push_back(v);
      three[static_cast<std::size_t>(uniform(rng, 0, 2))].push_back(v);
    }
    EXPECT_EQ(cut_width(g, b), cut_width(g, w));
    EXPECT_EQ(cut_width(g, Partition::bipartition(n, b)), cut_width(g, b));
    const int full = cut_width(g, Partition::from_classes(n, three));
    std::vector<std::vector<VertexId>> merged{three[0], three[1]};
    merged[0].insert(merged[0].end(), three[2].begin(), three[2].end());
    EXPECT_LE(cut_width(g, Partition::from_classes(n, merged)), full);
    EXPECT_EQ(tri_cut_width(g, three[0], three[1], three[2]), full);
  }
}

TEST(LongestPath, Examples) {
  EXPECT_EQ(longest_path_in_tree(path6()).size(), 6u);
  EXPECT_EQ(longest_path_in_tree(star4()).size(), 3u);
  const auto p = longest_path_in_tree(uneven_spider());
  EXPECT_EQ(p.size(), 8u);
  EXPECT_TRUE(is_path_in(uneven_spider(), p));
}

TEST(LongestPath, MatchesAllPairsSearch) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_tree_instance(rng, uniform(rng, 1, 12)).g;
    const auto p = longest_path_in_tree(g);
    EXPECT_EQ(static_cast<int>(p.size()), brute_longest(g));
    EXPECT_TRUE(is_path_in(g, p));
  }
}

TEST(LongestPath, RejectsNonTrees) {
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {0, 2}};
  EXPECT_THROW(longest_path_in_tree(Graph::from_edges(3, cycle)), Error);
  EXPECT_THROW(longest_path_in_tree(Graph(2)), Error);
}

TEST(RelativeDiameter, Examples) {
  EXPECT_EQ(relative_diameter(path6()), Fraction(1, 1));
  EXPECT_EQ(relative_diameter(star4()), Fraction(3, 5));
  EXPECT_EQ(relative_diameter(generate({.family = Family::Ternary, .h = 2}).g), Fraction(5, 13));
}

TEST(RelativeDiameter, ForestOfPathsIsOne) {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {3, 4}, {6, 7}};
  EXPECT_EQ(relative_diameter(Graph::from_edges(8, e)), Fraction(1, 1));
}

TEST(RelativeDiameter, SumsComponents) {
  // A star on 5 vertices next to an isolated vertex: (3 + 1) / 6.
  const std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  EXPECT_EQ(relative_diameter(Graph::from_edges(6, e)), Fraction(2, 3));
}

TEST(RelativeDiameter, RejectsCycles) {
  const std::vector<Edge> cycle{{0, 1}, {1, 2}, {0, 2}};
  try {
    relative_diameter(Graph::from_edges(3, cycle));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotAForest);
  }
}

TEST(ParseFraction, AcceptsRatiosDecimalsAndIntegers) {
  EXPECT_EQ(parse_fraction("3/4"), Fraction(3, 4));
  EXPECT_EQ(parse_fraction("0.75"), Fraction(3, 4));
  EXPECT_EQ(parse_fraction("1"), Fraction(1, 1));
  EXPECT_EQ(parse_fraction("6/8"), Fraction(3, 4));
  EXPECT_THROW(parse_fraction("x"), Error);
  EXPECT_THROW(parse_fraction("1/0"), Error);
}

}  // namespace
}  // namespace treecut
