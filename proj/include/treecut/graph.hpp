#ifndef TREECUT_GRAPH_HPP
#define TREECUT_GRAPH_HPP

#include <span>
#include <utility>
#include <vector>

#include "treecut/core.hpp"

namespace treecut {

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on vertices 0..n-1 stored as adjacency lists.
/// Self-loops and parallel edges are rejected at construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {}

  static Graph from_edges(int n, std::span<const Edge> edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }
  int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

  /// Each edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Subgraph induced by `vertices`; vertex k of the result is vertices[k].
  Graph induced(std::span<const VertexId> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::vector<VertexId>> adj_;
  int num_edges_ = 0;
};

/// A cut (V_1, ..., V_k): every vertex carries the index of its class.
struct Partition {
  std::vector<int> class_of;
  int num_classes = 0;

  /// Builds from explicit classes; throws PartitionInvalid unless the classes
  /// are disjoint and cover 0..n-1.
  static Partition from_classes(int n, const std::vector<std::vector<VertexId>>& classes);
  /// (B, V \ B).
  static Partition bipartition(int n, std::span<const VertexId> black);
};

int max_degree(const Graph& g);

int cut_width(const Graph& g, const Partition& p);

/// Width of (B, V \ B).
int cut_width(const Graph& g, std::span<const VertexId> black);

/// Number of edges of g[B u W u Z] joining different classes of (B, W, Z).
/// Vertices outside B, W and Z are ignored.
int tri_cut_width(const Graph& g, std::span<const VertexId> b, std::span<const VertexId> w,
                  std::span<const VertexId> z);

bool is_tree(const Graph& g);
bool is_forest(const Graph& g);

/// A path with the maximum number of vertices; two farthest-vertex sweeps,
/// ties broken by smallest vertex id. Throws NotATree.
std::vector<VertexId> longest_path_in_tree(const Graph& g);

/// (1/n) * sum over components of the vertex count of a longest path.
/// Throws NotAForest.
Fraction relative_diameter(const Graph& g);

}  // namespace treecut

#endif  // TREECUT_GRAPH_HPP
