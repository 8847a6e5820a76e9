#include "treecut/approx_cut.hpp"

namespace treecut {

SubtreeWeights compute_subtree_weights(const TreeDecomposition& td, NodeId root, OpsCounter* ops) {
  const auto nodes = static_cast<std::size_t>(td.num_nodes());
  SubtreeWeights sw;
  sw.root = root;
  sw.parent.assign(nodes, -2);
  sw.y.assign(nodes, 0);
  sw.y_tilde.assign(nodes, 0);
  sw.children.assign(nodes, {});
  std::vector<std::int64_t> common(nodes, 0);
  std::vector<char> seen(static_cast<std::size_t>(td.graph_n), 0);

  auto discover = [&](NodeId i) {
    for (VertexId v : td.clusters[i]) {
      common[i] += seen[v];
      seen[v] = 1;
    }
    sw.y[i] = static_cast<std::int64_t>(td.clusters[i].size());
    tick(ops, 1 + td.clusters[i].size());
  };

  sw.parent[root] = -1;
  discover(root);
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [i, next] = stack.back();
    if (next < td.adj[i].size()) {
      const NodeId j = td.adj[i][next++];
      tick(ops);
      if (sw.parent[j] == -2) {
        sw.parent[j] = i;
        discover(j);
        stack.emplace_back(j, 0);
      }
      continue;
    }
    // i turns black: y_i already holds n_i plus the children's y~.
    const NodeId done = i;
    stack.pop_back();
    sw.y_tilde[done] = sw.y[done] - common[done];
    if (sw.parent[done] >= 0) sw.y[sw.parent[done]] += sw.y_tilde[done];
  }
  sw.y_tilde[root] = sw.y[root];

  // One counting sort over all non-root nodes, keyed by y~ descending.
  const auto key_range = static_cast<std::size_t>(td.graph_n) + 1;
  auto key = [&](NodeId j) { return key_range - 1 - static_cast<std::size_t>(sw.y_tilde[j]); };
  std::vector<std::size_t> start(key_range + 1, 0);
  for (NodeId j = 0; j < td.num_nodes(); ++j) {
    if (sw.parent[j] >= 0) ++start[key(j) + 1];
  }
  for (std::size_t k = 1; k <= key_range; ++k) start[k] += start[k - 1];
  std::vector<NodeId> sorted(start[key_range]);
  for (NodeId j = 0; j < td.num_nodes(); ++j) {
    if (sw.parent[j] >= 0) sorted[start[key(j)]++] = j;
  }
  for (NodeId j : sorted) sw.children[sw.parent[j]].push_back(j);
  tick(ops, 2 * nodes + key_range);
  return sw;
}

int approx_iteration_bound(const Fraction& c) {
  if (c.num <= 0 || c.num >= c.den) throw Error(ErrorCode::BadFraction, "c must lie in (0,1)");
  int k = 0;
  __int128 pow = 1;
  while (pow * (c.den - c.num) < c.den) {
    pow *= 2;
    ++k;
  }
  return k;
}

ApproxCutResult approximate_cut(const TreeDecomposition& td, std::int64_t m, const Fraction& c,
                                OpsCounter* ops) {
  if (c.num <= 0 || c.num >= c.den) {
    throw Error(ErrorCode::BadFraction, "c = " + c.str() + " is not in (0,1)");
  }
  const int n = td.graph_n;
  if (m < 1 || m > n) {
    throw Error(ErrorCode::BadSize, "m = " + std::to_string(m) + " is not in [1," +
                                        std::to_string(n) + "]");
  }
  if (td.num_nodes() == 0) throw Error(ErrorCode::EmptyDecomposition, "no nodes");
  const SubtreeWeights sw = compute_subtree_weights(td, 0, ops);
  if (sw.y[0] < m) {
    throw Error(ErrorCode::InvalidDecomposition, "clusters cover fewer than m vertices");
  }

  // Descend to a node with y >= m all of whose children have y < m.
  NodeId i = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (NodeId j : sw.children[i]) {
      tick(ops);
      if (sw.y[j] >= m) {
        i = j;
        moved = true;
        break;
      }
    }
  }

  std::vector<char> in_b(static_cast<std::size_t>(n), 0);
  std::int64_t b_size = 0;
  ApproxCutResult res;
  std::vector<NodeId> stack;
  // Loop while |B| <= c*m.
  while (static_cast<__int128>(b_size) * c.den <= static_cast<__int128>(c.num) * m) {
    ++res.iterations;
    const std::int64_t budget = m - b_size;
    const auto& kids = sw.children[i];
    std::size_t ell = 0;
    std::int64_t taken = 0;
    while (ell < kids.size() && taken + sw.y_tilde[kids[ell]] <= budget) {
      taken += sw.y_tilde[kids[ell]];
      ++ell;
    }
    tick(ops, ell + 1);
    for (std::size_t h = 0; h < ell; ++h) {
      stack.assign(1, kids[h]);
      while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (VertexId v : td.clusters[u]) in_b[v] = 1;
        for (NodeId w : sw.children[u]) stack.push_back(w);
        tick(ops, 1 + td.clusters[u].size() + sw.children[u].size());
      }
    }
    if (ell > 0) {
      for (VertexId v : td.clusters[i]) in_b[v] = 0;
      tick(ops, td.clusters[i].size());
    }
    b_size += taken;
    if (ell == kids.size()) {
      std::int64_t need = m - b_size;
      for (VertexId v : td.clusters[i]) {
        if (need == 0) break;
        in_b[v] = 1;
        --need;
        tick(ops);
      }
      if (need != 0) throw Error(ErrorCode::InternalInvariant, "cluster too small for the fill step");
      b_size = m;
      break;
    }
    NodeId j = kids[ell];
    while (j != -1 && sw.y[j] >= m - b_size) {
      i = j;
      j = sw.children[i].empty() ? -1 : sw.children[i].front();
      tick(ops);
    }
  }

  res.b.reserve(static_cast<std::size_t>(b_size));
  for (VertexId v = 0; v < n; ++v) {
    if (in_b[v]) res.b.push_back(v);
  }
  tick(ops, static_cast<std::uint64_t>(n));
  if (static_cast<std::int64_t>(res.b.size()) != b_size) {
    throw Error(ErrorCode::InternalInvariant, "bit array and size counter disagree");
  }
  return res;
}

}  // namespace treecut
