#ifndef TREECUT_TREE_DECOMPOSITION_HPP
#define TREECUT_TREE_DECOMPOSITION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "treecut/core.hpp"
#include "treecut/graph.hpp"

namespace treecut {

/// A tree T over nodes 0..N-1 whose node i carries the cluster X^i, a subset of
/// the vertices 0..graph_n-1 of the decomposed graph. Clusters are unordered
/// lists; their order is preserved by every operation that copies them.
struct TreeDecomposition {
  int graph_n = 0;
  std::vector<std::vector<NodeId>> adj;
  std::vector<std::vector<VertexId>> clusters;

  /// Checks id ranges, duplicate cluster entries and tree-edge sanity
  /// (InvalidDecomposition); tree shape itself is left to validate().
  static TreeDecomposition from_edges(int graph_n, std::vector<std::vector<VertexId>> clusters,
                                      std::span<const std::pair<NodeId, NodeId>> edges);

  int num_nodes() const { return static_cast<int>(clusters.size()); }
  /// Each tree edge once as (i, j) with i < j, sorted.
  std::vector<std::pair<NodeId, NodeId>> tree_edges() const;

  friend bool operator==(const TreeDecomposition& a, const TreeDecomposition& b);
};

struct ValidityReport {
  bool tree_ok = true;
  bool t1_ok = true;
  bool t2_ok = true;
  bool t3_ok = true;
  std::optional<VertexId> uncovered_vertex;
  std::optional<Edge> uncovered_edge;
  std::optional<VertexId> disconnected_vertex;

  bool ok() const { return tree_ok && t1_ok && t2_ok && t3_ok; }
  std::string describe() const;
};

/// Checks that T is a tree and properties (T1), (T2) and (T3') against g.
ValidityReport validate(const Graph& g, const TreeDecomposition& td);

/// |V(T)| + sum of cluster sizes.
std::int64_t size(const TreeDecomposition& td);
/// max |X^i| - 1; -1 when every cluster is empty.
int width(const TreeDecomposition& td);

/// Contracts every tree edge {i, j} with X^i a subset of X^j in one DFS from
/// node 0. `node_map`, if given, receives the output node of each input node.
/// Throws EmptyDecomposition when all clusters are empty.
TreeDecomposition make_nonredundant(const TreeDecomposition& td, OpsCounter* ops = nullptr,
                                    std::vector<NodeId>* node_map = nullptr);

bool is_nonredundant(const TreeDecomposition& td);

/// Restriction to the subtree on `keep` (plus one optional extra edge) and to
/// the vertices with new_id[v] >= 0, renamed to new_id[v] in 0..new_n-1.
/// Output node k is keep[k]. Empty clusters are kept. Throws
/// DisconnectedKeepTree if the kept nodes do not form a tree.
TreeDecomposition restrict(const TreeDecomposition& td, std::span<const NodeId> keep,
                           std::span<const VertexId> new_id, int new_n,
                           std::optional<std::pair<NodeId, NodeId>> extra_edge = std::nullopt,
                           OpsCounter* ops = nullptr);

/// new_id array mapping the listed vertices to 0..|subset|-1 in list order.
std::vector<VertexId> subset_renaming(int n, std::span<const VertexId> subset);

/// Nodes i_0, ..., i_l of a path in T; front() is the designated end i_0.
struct TreePath {
  std::vector<NodeId> nodes;
};

struct WeightReport {
  std::int64_t weight = 0;
  Fraction relative;
  bool heaviest = false;
};

struct HeaviestPath {
  TreePath path;
  WeightReport weight;
};

/// Two weighted farthest-node sweeps, the first from node 0. Among equal
/// weights the node discovered first wins. The path runs from the end found by
/// the first sweep to the end found by the second.
HeaviestPath heaviest_path(const TreeDecomposition& td, OpsCounter* ops = nullptr);

/// Throws InvalidDecomposition if `p` is not a path in T.
WeightReport path_weight(const TreeDecomposition& td, const TreePath& p);

struct NonredundantEnd {
  bool ok = false;
  /// Which end qualifies; the front is preferred when both do.
  bool at_front = false;
};

NonredundantEnd is_nonredundant_path(const TreeDecomposition& td, const TreePath& p);

/// True if X^{i_0} is nonempty and no cluster on p is contained in its
/// predecessor, reading p from the front.
bool is_nonredundant_from_front(const TreeDecomposition& td, const TreePath& p);

/// Width-one decomposition of a tree: one node per edge, arranged so that a
/// longest path of g is covered by a single tree path. A single vertex gives
/// one node {v}. Throws NotATree.
TreeDecomposition tree_to_width1_td(const Graph& g);

}  // namespace treecut

#endif  // TREECUT_TREE_DECOMPOSITION_HPP
