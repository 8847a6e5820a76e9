#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"
#include "treecut/bisect.hpp"
#include "treecut/labeling.hpp"

namespace treecut {
namespace {

using testing::uniform;
using NodeEdges = std::vector<std::pair<NodeId, NodeId>>;

TreeDecomposition chain(int n, std::vector<std::vector<VertexId>> clusters) {
  NodeEdges e;
  for (std::size_t k = 1; k < clusters.size(); ++k) e.emplace_back(static_cast<NodeId>(k - 1), static_cast<NodeId>(k));
  return TreeDecomposition::from_edges(n, std::move(clusters), e);
}

TreePath whole(const TreeDecomposition& td) {
  TreePath p;
  for (NodeId i = 0; i < td.num_nodes(); ++i) p.nodes.push_back(i);
  return p;
}

Graph path6() { return generate({.family = Family::Path, .n = 6}).g; }
TreeDecomposition path6_td() { return chain(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}); }

// Star with center 0 and leaves 1..4, decomposed along a path of edge nodes.
Graph star4() { return generate({.family = Family::Star, .n = 5}).g; }
TreeDecomposition star4_path_td() { return chain(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }

// Independent check of the labeling invariants against the definitions.
void expect_labeling_invariants(const TreeDecomposition& td, const TreePath& path, const PLabeling& pl) {
  const int n = td.graph_n;
  ASSERT_EQ(pl.n, n);
  for (int l = 0; l < n; ++l) ASSERT_EQ(pl.label_of[pl.vertex_at[l]], l);
  std::vector<char> earlier(static_cast<std::size_t>(n), 0), seen(static_cast<std::size_t>(n), 0);
  std::set<VertexId> r_all;
  for (NodeId i : path.nodes) r_all.insert(td.clusters[i].begin(), td.clusters[i].end());
  const auto blocks = block_layout(pl);
  ASSERT_EQ(blocks.size(), path.nodes.size());
  int expected_start = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Block& blk = blocks[b];
    const NodeId i = path.nodes[b];
    EXPECT_EQ(blk.node, i);
    EXPECT_EQ(blk.s_first, expected_start);
    EXPECT_EQ(blk.r_first, blk.s_first + blk.s_len);
    expected_start = blk.r_first + blk.r_len;
    // R_i: vertices whose closest path cluster to the front is X^i.
    std::set<VertexId> r_i;
    for (VertexId v : td.clusters[i]) {
      if (!earlier[v]) r_i.insert(v);
    }
    std::set<VertexId> got;
    for (int l = blk.r_first; l < blk.r_first + blk.r_len; ++l) got.insert(pl.vertex_at[l]);
    EXPECT_EQ(got, r_i);
    EXPECT_FALSE(r_i.empty());
    // S_i: off-path vertices hanging at i.
    const auto hang = hanging_tree(pl, i);
    std::set<VertexId> reach;
    for (NodeId h : hang) reach.insert(td.clusters[h].begin(), td.clusters[h].end());
    for (int l = blk.s_first; l < blk.r_first; ++l) {
      const VertexId v = pl.vertex_at[l];
      EXPECT_FALSE(r_all.count(v));
      EXPECT_TRUE(reach.count(v));
      EXPECT_FALSE(seen[v]);
      seen[v] = 1;
    }
    for (VertexId v : td.clusters[i]) earlier[v] = 1;
  }
  EXPECT_EQ(expected_start, n);
  for (VertexId v = 0; v < n; ++v) EXPECT_EQ(pl.in_r[v] != 0, r_all.count(v) == 1);
}

TEST(CircularIndex, SuccessorIsABijection) {
  for (int n = 1; n <= 12; ++n) {
    const CircularIndex c{n};
    for (int m = -n; m <= 2 * n; ++m) {
      std::vector<int> hit(static_cast<std::size_t>(n), 0);
      for (int x = 0; x < n; ++x) {
        ++hit[c.add(x, m)];
        EXPECT_EQ(c.sub(c.add(x, m), m), x);
      }
      EXPECT_EQ(*std::min_element(hit.begin(), hit.end()), 1);
    }
  }
}

TEST(CircularIndex, Between) {
  const CircularIndex c{10};
  EXPECT_TRUE(c.between(8, 9, 2));
  EXPECT_TRUE(c.between(8, 1, 2));
  EXPECT_FALSE(c.between(8, 3, 2));
  EXPECT_TRUE(c.between(4, 4, 4));
  EXPECT_FALSE(c.between(4, 5, 4));
  EXPECT_EQ(c.span(8, 1), 4);
}

TEST(BuildPLabeling, PathFollowsPathOrder) {
  const TreeDecomposition td = path6_td();
  const PLabeling pl = build_plabeling(td, whole(td));
  EXPECT_EQ(pl.vertex_at, (std::vector<VertexId>{0, 1, 2, 3, 4, 5}));
  for (VertexId v = 0; v < 6; ++v) EXPECT_TRUE(pl.in_r[v]);
  for (const Block& b : block_layout(pl)) EXPECT_EQ(b.s_len, 0);
  expect_labeling_invariants(td, whole(td), pl);
}

TEST(BuildPLabeling, StarAlongPathDecomposition) {
  const TreeDecomposition td = star4_path_td();
  const PLabeling pl = build_plabeling(td, whole(td));
  const auto blocks = block_layout(pl);
  ASSERT_EQ(blocks.size(), 4u);
  EXPECT_EQ(blocks[0].r_len, 2);
  for (std::size_t b = 1; b < 4; ++b) {
    EXPECT_EQ(blocks[b].r_len, 1);
    EXPECT_EQ(pl.vertex_at[blocks[b].r_first], static_cast<VertexId>(b + 1));
  }
  expect_labeling_invariants(td, whole(td), pl);
}

TEST(BuildPLabeling, SpiderHangsOffPathVerticesAtTheBranch) {
  const Instance inst = generate({.family = Family::Spider, .legs = 3, .length = 8});
  const HeaviestPath hp = heaviest_path(inst.td);
  const PLabeling pl = build_plabeling(inst.td, hp.path);
  int with_s = 0, s_total = 0;
  for (const Block& b : block_layout(pl)) {
    if (b.s_len > 0) {
      ++with_s;
      s_total += b.s_len;
      EXPECT_GT(hanging_tree(pl, b.node).size(), 1u);
    }
  }
  EXPECT_EQ(with_s, 1);
  EXPECT_EQ(s_total, 25 - hp.weight.weight);
  expect_labeling_invariants(inst.td, hp.path, pl);
}

TEST(BuildPLabeling, RejectsRedundantFront) {
  const TreeDecomposition td = chain(3, {{0, 1}, {1}, {1, 2}});
  try {
    build_plabeling(td, whole(td));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RedundantPath);
  }
}

TEST(BuildPLabeling, InvariantsOnRandomDecompositions) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::random_td_instance(rng, uniform(rng, 1, 50), uniform(rng, 1, 60), false, 6, 50);
    const TreeDecomposition td = make_nonredundant(inst.td);
    const HeaviestPath hp = heaviest_path(td);
    OpsCounter ops;
    const PLabeling pl = build_plabeling(td, hp.path, &ops);
    expect_labeling_invariants(td, hp.path, pl);
    EXPECT_LE(ops.touches, 16u * static_cast<std::uint64_t>(size(td)));
  }
}

TEST(BuildPLabeling, PrefixCutsAtRVerticesAreCheap) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_low_width_instance(rng, uniform(rng, 2, 60), 4);
    const TreeDecomposition td = make_nonredundant(inst.td);
    const PLabeling pl = build_plabeling(td, heaviest_path(td).path);
    const int t = width(td) + 1, delta = max_degree(inst.g);
    for (int l = 0; l < pl.n; ++l) {
      if (!pl.in_r[pl.vertex_at[l]]) continue;
      const std::vector<VertexId> prefix(pl.vertex_at.begin(), pl.vertex_at.begin() + l + 1);
      EXPECT_LE(cut_width(inst.g, prefix), t * delta);
    }
  }
}

TEST(ClusterBoundaryEdges, Examples) {
  EXPECT_EQ(cluster_boundary_edges(path6(), path6_td(), 2), (std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}}));
  const TreeDecomposition with_empty = chain(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {}});
  EXPECT_TRUE(cluster_boundary_edges(path6(), with_empty, 5).empty());
  EXPECT_EQ(cluster_boundary_edges(star4(), star4_path_td(), 1).size(), 4u);
}

TEST(ClusterBoundaryEdges, AtMostTDelta) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_low_width_instance(rng, uniform(rng, 1, 40), 4);
    const int bound = (width(inst.td) + 1) * max_degree(inst.g);
    for (NodeId i = 0; i < inst.td.num_nodes(); ++i) {
      EXPECT_LE(static_cast<int>(cluster_boundary_edges(inst.g, inst.td, i).size()), bound);
    }
  }
}

void expect_parts_split_graph(const Graph& g, const TreeDecomposition& td, NodeId i, const NodeParts& parts) {
  std::vector<int> part_of(static_cast<std::size_t>(g.num_vertices()), -1);
  const auto all = parts.parts();
  for (std::size_t k = 0; k < all.size(); ++k) {
    for (VertexId v : all[k]) {
      EXPECT_EQ(part_of[v], -1);
      part_of[v] = static_cast<int>(k);
    }
  }
  for (int p : part_of) EXPECT_GE(p, 0);
  const auto boundary = cluster_boundary_edges(g, td, i);
  for (const Edge& e : g.edges()) {
    if (part_of[e.first] != part_of[e.second]) {
      EXPECT_TRUE(std::binary_search(boundary.begin(), boundary.end(), e));
    }
  }
}

TEST(DecomposeByNode, Examples) {
  const TreeDecomposition td = path6_td();
  const PLabeling pl = build_plabeling(td, whole(td));
  const NodeParts mid = decompose_by_node(path6(), td, pl, 2);
  EXPECT_EQ(mid.prefix, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(mid.r_singletons, (std::vector<VertexId>{3}));
  EXPECT_EQ(mid.suffix, (std::vector<VertexId>{4, 5}));
  expect_parts_split_graph(path6(), td, 2, mid);
  EXPECT_TRUE(decompose_by_node(path6(), td, pl, 0).prefix.empty());

  const Instance spider = generate({.family = Family::Spider, .legs = 3, .length = 8});
  const HeaviestPath hp = heaviest_path(spider.td);
  const PLabeling sp = build_plabeling(spider.td, hp.path);
  for (const Block& b : block_layout(sp)) {
    const NodeParts parts = decompose_by_node(spider.g, spider.td, sp, b.node);
    EXPECT_EQ(parts.s_part.empty(), b.s_len == 0);
    expect_parts_split_graph(spider.g, spider.td, b.node, parts);
  }
}

TEST(DecomposeByNode, RandomInstances) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 100; ++trial) {
    const Instance inst = testing::random_td_instance(rng, uniform(rng, 1, 40), uniform(rng, 1, 40), false, 5, 50);
    const TreeDecomposition td = make_nonredundant(inst.td);
    const HeaviestPath hp = heaviest_path(td);
    const PLabeling pl = build_plabeling(td, hp.path);
    for (NodeId i : hp.path.nodes) expect_parts_split_graph(inst.g, td, i, decompose_by_node(inst.g, td, pl, i));
  }
}

TEST(DumpPLabeling, Golden) {
  const TreeDecomposition td = chain(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(dump_plabeling(build_plabeling(td, whole(td))),
            "node 1: S=- R=[1,2]\nnode 2: S=- R=[3,3]\nnode 3: S=- R=[4,4]\n"
            "node 4: S=- R=[5,5]\nnode 5: S=- R=[6,6]\n");
  const Instance spider = generate({.family = Family::Spider, .legs = 3, .length = 2});
  const TreeDecomposition std_td = make_nonredundant(spider.td);
  const HeaviestPath hp = heaviest_path(std_td);
  const std::string dump = dump_plabeling(build_plabeling(std_td, hp.path));
  EXPECT_EQ(static_cast<std::size_t>(std::count(dump.begin(), dump.end(), '\n')), hp.path.nodes.size());
  EXPECT_NE(dump.find("S=["), std::string::npos) << dump;
}

TEST(InPlaceUpdate, RebuildGivesSameRSets) {
  std::mt19937_64 rng(59);
  int updates = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Instance inst = trial % 3 == 0 ? testing::random_tree_instance(rng, uniform(rng, 2, 80))
                        : trial % 3 == 1 ? testing::random_low_width_instance(rng, uniform(rng, 2, 80), 3)
                                         : testing::random_spider_instance(rng);
    const TreeDecomposition td = make_nonredundant(inst.td);
    PLabeling pl = build_plabeling(td, heaviest_path(td).path);
    const int m = uniform(rng, 1, pl.n);
    const StepResult step = doubling_step(pl, m, true);
    if (step.trace.kind == StepCase::Case1) continue;
    ++updates;
    const TreeDecomposition local = materialize(pl);
    TreePath p;
    for (std::size_t k = 0; k < pl.path.size(); ++k) p.nodes.push_back(static_cast<NodeId>(k));
    const PLabeling fresh = build_plabeling(local, p);
    const auto a = block_layout(pl), b = block_layout(fresh);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      std::set<VertexId> ra, rb;
      for (int l = a[k].r_first; l < a[k].r_first + a[k].r_len; ++l) ra.insert(pl.vertex_at[l]);
      for (int l = b[k].r_first; l < b[k].r_first + b[k].r_len; ++l) rb.insert(pl.vertex_at[fresh.vertex_at[l]]);
      EXPECT_EQ(ra, rb);
    }
  }
  EXPECT_GT(updates, 20);
}

}  // namespace
}  // namespace treecut
