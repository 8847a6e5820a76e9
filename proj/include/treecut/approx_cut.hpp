#ifndef TREECUT_APPROX_CUT_HPP
#define TREECUT_APPROX_CUT_HPP

#include <cstdint>
#include <vector>

#include "treecut/core.hpp"
#include "treecut/tree_decomposition.hpp"

namespace treecut {

/// y_i = |Y^i| where Y^i is the union of the clusters below i, and
/// y~_i = |Y^i \ X^{p(i)}| (y~_root = y_root). Children lists are sorted by
/// y~ descending, ties in increasing node id.
struct SubtreeWeights {
  NodeId root = 0;
  std::vector<NodeId> parent;
  std::vector<std::int64_t> y;
  std::vector<std::int64_t> y_tilde;
  std::vector<std::vector<NodeId>> children;
};

SubtreeWeights compute_subtree_weights(const TreeDecomposition& td, NodeId root,
                                       OpsCounter* ops = nullptr);

struct ApproxCutResult {
  std::vector<VertexId> b;
  /// Executions of the outer loop.
  int iterations = 0;
};

/// Smallest k with 2^k >= 1/(1-c), i.e. ceil(log2(1/(1-c))).
int approx_iteration_bound(const Fraction& c);

/// A set B with c*m < |B| <= m cut off by at most approx_iteration_bound(c)
/// cluster boundaries. T is rooted at node 0. Throws BadFraction unless
/// 0 < c < 1 and BadSize unless 1 <= m <= graph_n.
ApproxCutResult approximate_cut(const TreeDecomposition& td, std::int64_t m, const Fraction& c,
                                OpsCounter* ops = nullptr);

}  // namespace treecut

#endif  // TREECUT_APPROX_CUT_HPP
