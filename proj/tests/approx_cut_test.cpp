#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"
#include "treecut/approx_cut.hpp"

namespace treecut {
namespace {

using testing::uniform;
using NodeEdges = std::vector<std::pair<NodeId, NodeId>>;

TreeDecomposition chain(int n, std::vector<std::vector<VertexId>> clusters) {
  NodeEdges e;
  for (std::size_t k = 1; k < clusters.size(); ++k) e.emplace_back(static_cast<NodeId>(k - 1), static_cast<NodeId>(k));
  return TreeDecomposition::from_edges(n, std::move(clusters), e);
}

TreeDecomposition path6_td() { return chain(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}); }

// y and y~ straight from the definitions: unions over explicit descendant sets.
void expect_weights_match_definition(const TreeDecomposition& td, const SubtreeWeights& sw) {
  const int nodes = td.num_nodes();
  for (NodeId i = 0; i < nodes; ++i) {
    std::set<VertexId> y;
    std::vector<NodeId> stack{i};
    while (!stack.empty()) {
      const NodeId h = stack.back();
      stack.pop_back();
      y.insert(td.clusters[h].begin(), td.clusters[h].end());
      for (NodeId j : td.adj[h]) {
        // j is a child of h iff h lies on the root path of j.
        if (sw.parent[j] == h) stack.push_back(j);
      }
    }
    EXPECT_EQ(sw.y[i], static_cast<std::int64_t>(y.size()));
    std::set<VertexId> tilde = y;
    if (sw.parent[i] >= 0) {
      for (VertexId v : td.clusters[sw.parent[i]]) tilde.erase(v);
    }
    EXPECT_EQ(sw.y_tilde[i], static_cast<std::int64_t>(tilde.size()));
    std::int64_t sum = static_cast<std::int64_t>(td.clusters[i].size());
    for (std::size_t k = 0; k < sw.children[i].size(); ++k) {
      const NodeId j = sw.children[i][k];
      EXPECT_EQ(sw.parent[j], i);
      EXPECT_LE(sw.y[j], sw.y[i]);
      sum += sw.y_tilde[j];
      if (k > 0) {
        const NodeId prev = sw.children[i][k - 1];
        EXPECT_TRUE(sw.y_tilde[prev] > sw.y_tilde[j] || (sw.y_tilde[prev] == sw.y_tilde[j] && prev < j));
      }
    }
    EXPECT_EQ(sw.y[i], sum);
  }
}

TEST(SubtreeWeights, SingleNode) {
  const TreeDecomposition td = chain(5, {{0, 1, 2, 3, 4}});
  const SubtreeWeights sw = compute_subtree_weights(td, 0);
  EXPECT_EQ(sw.y[0], 5);
  EXPECT_TRUE(sw.children[0].empty());
}

TEST(SubtreeWeights, PathDecomposition) {
  const TreeDecomposition td = path6_td();
  const SubtreeWeights sw = compute_subtree_weights(td, 0);
  EXPECT_EQ(sw.y[0], 6);
  EXPECT_EQ(sw.y_tilde[4], 1);
  EXPECT_EQ(sw.y[4], 2);
  expect_weights_match_definition(td, sw);
}

TEST(SubtreeWeights, StarShapedTreeSortsChildren) {
  const TreeDecomposition td = TreeDecomposition::from_edges(
      8, {{0}, {0, 1}, {0, 2, 3}, {0, 4, 5, 6}, {0, 7}}, NodeEdges{{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const SubtreeWeights sw = compute_subtree_weights(td, 0);
  EXPECT_EQ(sw.children[0], (std::vector<NodeId>{3, 2, 1, 4}));
  expect_weights_match_definition(td, sw);
}

TEST(SubtreeWeights, RandomDecompositions) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::random_td_instance(rng, uniform(rng, 1, 30), uniform(rng, 1, 40), false, 6, 50);
    OpsCounter ops;
    const SubtreeWeights sw = compute_subtree_weights(inst.td, 0, &ops);
    expect_weights_match_definition(inst.td, sw);
    EXPECT_LE(ops.touches, 8u * static_cast<std::uint64_t>(size(inst.td) + inst.td.graph_n));
  }
}

TEST(IterationBound, Values) {
  EXPECT_EQ(approx_iteration_bound(Fraction(1, 2)), 1);
  EXPECT_EQ(approx_iteration_bound(Fraction(2, 3)), 2);
  EXPECT_EQ(approx_iteration_bound(Fraction(3, 4)), 2);
  EXPECT_EQ(approx_iteration_bound(Fraction(7, 8)), 3);
  EXPECT_EQ(approx_iteration_bound(Fraction(1, 100)), 1);
  EXPECT_EQ(approx_iteration_bound(Fraction(99, 100)), 7);
}

TEST(ApproximateCut, WholePathWithHalf) {
  const Graph g = generate({.family = Family::Path, .n = 6}).g;
  const ApproxCutResult res = approximate_cut(path6_td(), 6, Fraction(1, 2));
  // The root's only child covers 4 new vertices, then its cluster fills the rest.
  EXPECT_EQ(res.b, (std::vector<VertexId>{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(res.iterations, 1);
  EXPECT_LE(cut_width(g, res.b), 4);
}

TEST(ApproximateCut, SingleVertex) {
  const Instance inst = generate({.family = Family::Grid, .k = 3});
  for (int den : {2, 3, 10}) {
    const ApproxCutResult res = approximate_cut(inst.td, 1, Fraction(1, den));
    ASSERT_EQ(res.b.size(), 1u);
    EXPECT_LE(cut_width(inst.g, res.b), (width(inst.td) + 1) * max_degree(inst.g));
  }
}

TEST(ApproximateCut, Grid) {
  const Instance inst = generate({.family = Family::Grid, .k = 4});
  const ApproxCutResult res = approximate_cut(inst.td, 8, Fraction(3, 4));
  EXPECT_GT(res.b.size(), 6u);
  EXPECT_LE(res.b.size(), 8u);
  EXPECT_LE(cut_width(inst.g, res.b), 40);
  EXPECT_LE(res.iterations, 2);
}

TEST(ApproximateCut, Errors) {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InternalInvariant;
  };
  const TreeDecomposition td = path6_td();
  EXPECT_EQ(code([&] { approximate_cut(td, 3, Fraction(0, 1)); }), ErrorCode::BadFraction);
  EXPECT_EQ(code([&] { approximate_cut(td, 3, Fraction(1, 1)); }), ErrorCode::BadFraction);
  EXPECT_EQ(code([&] { approximate_cut(td, 0, Fraction(1, 2)); }), ErrorCode::BadSize);
  EXPECT_EQ(code([&] { approximate_cut(td, 7, Fraction(1, 2)); }), ErrorCode::BadSize);
}

TEST(ApproximateCut, ContractOnRandomInstances) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 600; ++trial) {
    const Instance inst = trial % 3 == 0   ? testing::random_tree_instance(rng, uniform(rng, 1, 200))
                          : trial % 3 == 1 ? testing::random_low_width_instance(rng, uniform(rng, 1, 200), 5)
                                           : testing::random_td_instance(rng, uniform(rng, 1, 80), uniform(rng, 1, 60), false, 6, 50);
    const int n = inst.g.num_vertices();
    const int m = uniform(rng, 1, n);
    const int den = uniform(rng, 2, 200);
    const Fraction c(uniform(rng, 1, den - 1), den);
    OpsCounter ops;
    const ApproxCutResult res = approximate_cut(inst.td, m, c, &ops);
    const auto b = static_cast<std::int64_t>(res.b.size());
    const int s = approx_iteration_bound(c);
    EXPECT_GT(static_cast<__int128>(b) * c.den, static_cast<__int128>(c.num) * m);
    EXPECT_LE(b, m);
    EXPECT_TRUE(std::is_sorted(res.b.begin(), res.b.end()));
    EXPECT_EQ(std::adjacent_find(res.b.begin(), res.b.end()), res.b.end());
    EXPECT_LE(res.iterations, s);
    EXPECT_LE(cut_width(inst.g, res.b), res.iterations * (width(inst.td) + 1) * max_degree(inst.g));
    EXPECT_LE(ops.touches, 12u * static_cast<std::uint64_t>(size(inst.td) + n));
  }
}

}  // namespace
}  // namespace treecut
