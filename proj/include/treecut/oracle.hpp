#ifndef TREECUT_ORACLE_HPP
#define TREECUT_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "treecut/core.hpp"
#include "treecut/graph.hpp"
#include "treecut/tree_decomposition.hpp"

namespace treecut {

struct OracleResult {
  int width = 0;
  /// The black side B of one optimal cut (B, V \ B), sorted.
  std::vector<VertexId> witness;
  /// Candidate sets or table entries examined.
  std::uint64_t search_space = 0;
};

inline constexpr int kBruteForceMaxVertices = 24;
inline constexpr int kTreeDpMaxVertices = 5000;
inline constexpr int kBruteForceMaxNodes = 12;

/// Minimum width over all sets B with |B| = floor(n/2). Throws
/// EnumerationLimit for n > 24.
OracleResult brute_force_min_bisection(const Graph& g);

/// Minimum width over all sets B with |B| = m, 0 <= m <= n.
OracleResult brute_force_min_cut_size_m(const Graph& g, int m);

/// Exact minimum bisection of a tree by a subtree-size table. Throws NotATree
/// and EnumerationLimit for n > 5000.
OracleResult tree_dp_min_bisection(const Graph& g);

/// Heaviest path over all node pairs; the first pair (i <= j, in lexicographic
/// order) of maximum weight wins. Throws EnumerationLimit for |V(T)| > 12.
HeaviestPath brute_force_heaviest_path(const TreeDecomposition& td);

}  // namespace treecut

#endif  // TREECUT_ORACLE_HPP
