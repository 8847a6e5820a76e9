#ifndef TREECUT_LABELING_HPP
#define TREECUT_LABELING_HPP

#include <string>
#include <vector>

#include "treecut/core.hpp"
#include "treecut/graph.hpp"
#include "treecut/tree_decomposition.hpp"

namespace treecut {

/// Labels are 0..n-1 and all label arithmetic is mod n.
struct CircularIndex {
  int n = 1;

  int add(int x, int m) const { return static_cast<int>(((static_cast<long long>(x) + m) % n + n) % n); }
  int sub(int x, int m) const { return add(x, -m); }
  /// True if walking up from a reaches b no later than c (b = a when a = c).
  bool between(int a, int b, int c) const {
    return sub(b, a) <= sub(c, a);
  }
  /// Number of labels in the cyclic interval [a, b].
  int span(int a, int b) const { return sub(b, a) + 1; }
};

/// Circular labeling of the current vertex set along a path P of a tree
/// decomposition, together with its lookup arrays. Arrays indexed by vertex
/// are sized to the vertex universe of the source decomposition and keep the
/// original vertex names; only vertex_at is sized to the current vertex count.
///
/// The labeling may be updated in place when the current graph shrinks to an
/// induced subgraph; the source decomposition is then never copied.
struct PLabeling {
  const TreeDecomposition* source = nullptr;
  int n = 0;

  std::vector<int> label_of;          // A_L
  std::vector<VertexId> vertex_at;    // A_V
  std::vector<char> in_r;             // A_R
  std::vector<NodeId> path_node_of;   // A_P
  std::vector<NodeId> path;           // L_P; front() is i_0

  /// Nodes of the path the labeling was first built for; hanging trees never
  /// enter them.
  std::vector<char> blocked;
  /// Path nodes whose hanging tree has been cut down to the node itself.
  std::vector<char> trimmed;

  bool is_current(VertexId x) const {
    const int l = label_of[x];
    return l >= 0 && l < n && vertex_at[l] == x;
  }
  CircularIndex circle() const { return CircularIndex{n}; }
};

/// Builds the labeling for `path` read from its front. Every cluster vertex of
/// td is labeled. Throws RedundantPath unless the front is a nonredundant end.
PLabeling build_plabeling(const TreeDecomposition& td, const TreePath& path,
                          OpsCounter* ops = nullptr);

/// Label intervals of one path node: S_i occupies [s_first, s_first + s_len)
/// and R_i occupies [r_first, r_first + r_len), with R_i directly after S_i.
struct Block {
  NodeId node = -1;
  int s_first = 0;
  int s_len = 0;
  int r_first = 0;
  int r_len = 0;
};

/// One block per node of pl.path, in path order, read off the labels in O(n).
/// Throws InternalInvariant if the labels are not laid out in blocks.
std::vector<Block> block_layout(const PLabeling& pl, OpsCounter* ops = nullptr);

/// Nodes of the hanging tree T_i in DFS preorder, starting with i.
std::vector<NodeId> hanging_tree(const PLabeling& pl, NodeId i, OpsCounter* ops = nullptr);

/// The current decomposition (T, X) the labeling describes: the path plus the
/// hanging trees, clusters restricted to current vertices and renamed to
/// their labels.
TreeDecomposition materialize(const PLabeling& pl);

/// Per path node, 1-based label intervals of S_i and R_i, one line each.
std::string dump_plabeling(const PLabeling& pl);

/// Edges with at least one endpoint in X^i, sorted.
std::vector<Edge> cluster_boundary_edges(const Graph& g, const TreeDecomposition& td, NodeId i);

/// The parts left after removing the edges touching X^i, for a path node i.
/// `prefix` is empty when i = i_0 and `suffix` is empty when i is the last
/// path node.
struct NodeParts {
  std::vector<VertexId> prefix;
  std::vector<VertexId> r_singletons;
  std::vector<VertexId> s_part;
  std::vector<VertexId> suffix;

  /// All nonempty parts, each R_i vertex on its own.
  std::vector<std::vector<VertexId>> parts() const;
};

/// Requires a freshly built labeling (current vertices = all vertices of g).
NodeParts decompose_by_node(const Graph& g, const TreeDecomposition& td, const PLabeling& pl,
                            NodeId i);

}  // namespace treecut

#endif  // TREECUT_LABELING_HPP
