#include "treecut/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>

namespace treecut {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> mask(static_cast<std::size_t>(g.num_vertices()), 0);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    for (VertexId w : g.neighbors(v)) mask[v] |= 1u << w;
  }
  return mask;
}

std::vector<VertexId> members(std::uint32_t set) {
  std::vector<VertexId> out;
  for (; set != 0; set &= set - 1) out.push_back(std::countr_zero(set));
  return out;
}

}  // namespace

OracleResult brute_force_min_cut_size_m(const Graph& g, int m) {
  const int n = g.num_vertices();
  if (n > kBruteForceMaxVertices) {
    throw Error(ErrorCode::EnumerationLimit,
                "n = " + std::to_string(n) + " exceeds " + std::to_string(kBruteForceMaxVertices));
  }
  if (m < 0 || m > n) {
    throw Error(ErrorCode::BadSize,
                "m = " + std::to_string(m) + " is not in [0," + std::to_string(n) + "]");
  }
  const auto adj = adjacency_masks(g);
  const std::uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  OracleResult best;
  best.width = std::numeric_limits<int>::max();
  std::uint32_t best_set = 0;
  auto evaluate = [&](std::uint32_t set) {
    ++best.search_space;
    int w = 0;
    for (std::uint32_t s = set; s != 0; s &= s - 1) {
      w += std::popcount(adj[std::countr_zero(s)] & (all & ~set));
    }
    if (w < best.width) {
      best.width = w;
      best_set = set;
    }
  };
  if (m == 0) {
    evaluate(0);
  } else {
    // Gosper's hack: all n-bit words with m bits set, in increasing order.
    std::uint64_t set = (std::uint64_t{1} << m) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (set < limit) {
      evaluate(static_cast<std::uint32_t>(set));
      const std::uint64_t c = set & (~set + 1);
      const std::uint64_t r = set + c;
      set = (((r ^ set) >> 2) / c) | r;
    }
  }
  best.witness = members(best_set);
  return best;
}

OracleResult brute_force_min_bisection(const Graph& g) {
  return brute_force_min_cut_size_m(g, g.num_vertices() / 2);
}

OracleResult tree_dp_min_bisection(const Graph& g) {
  const int n = g.num_vertices();
  if (n > kTreeDpMaxVertices) {
    throw Error(ErrorCode::EnumerationLimit,
                "n = " + std::to_string(n) + " exceeds " + std::to_string(kTreeDpMaxVertices));
  }
  if (!is_tree(g)) throw Error(ErrorCode::NotATree, "tree DP needs a tree");
  const int target = n / 2;
  constexpr int kInf = std::numeric_limits<int>::max() / 4;

  // Root at 0; children in BFS order so that reversed order is bottom-up.
  std::vector<VertexId> order{0}, parent(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<VertexId>> children(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < order.size(); ++k) {
    const VertexId v = order[k];
    for (VertexId w : g.neighbors(v)) {
      if (w != parent[v] && w != 0) {
        parent[w] = v;
        children[v].push_back(w);
        order.push_back(w);
      }
    }
  }

  // table[v][c][k]: fewest cut edges inside the subtree of v with k black
  // vertices and v colored c (1 = black).
  using Table = std::array<std::vector<int>, 2>;
  std::vector<Table> table(static_cast<std::size_t>(n));
  OracleResult res;

  // Merges the children of v in list order; prefix[j] is the table after the
  // first j children.
  auto merge = [&](VertexId v, std::vector<Table>* prefix) {
    Table cur;
    cur[0] = {0, kInf};
    cur[1] = {kInf, 0};
    if (prefix) prefix->push_back(cur);
    for (VertexId u : children[v]) {
      const Table& sub = table[u];
      const std::size_t size = cur[0].size() + sub[0].size() - 1;
      Table next;
      for (int c = 0; c < 2; ++c) {
        next[c].assign(size, kInf);
        for (std::size_t a = 0; a < cur[c].size(); ++a) {
          if (cur[c][a] >= kInf) continue;
          for (std::size_t b = 0; b < sub[0].size(); ++b) {
            const int best = std::min(sub[c][b], sub[1 - c][b] + 1);
            if (best >= kInf) continue;
            next[c][a + b] = std::min(next[c][a + b], cur[c][a] + best);
          }
        }
        res.search_space += cur[c].size() * sub[0].size();
      }
      cur = std::move(next);
      if (prefix) prefix->push_back(cur);
    }
    return cur;
  };

  for (auto it = order.rbegin(); it != order.rend(); ++it) table[*it] = merge(*it, nullptr);

  const int root_color = table[0][0][target] <= table[0][1][target] ? 0 : 1;
  res.width = table[0][root_color][target];

  // Walk back down, recomputing each vertex's prefix tables to split k.
  std::vector<std::pair<VertexId, std::pair<int, int>>> stack{{0, {target, root_color}}};
  std::vector<Table> prefix;
  while (!stack.empty()) {
    const auto [v, want] = stack.back();
    auto [k, c] = want;
    stack.pop_back();
    if (c == 1) res.witness.push_back(v);
    prefix.clear();
    merge(v, &prefix);
    for (std::size_t j = children[v].size(); j-- > 0;) {
      const VertexId u = children[v][j];
      const Table& before = prefix[j];
      const Table& sub = table[u];
      const int goal = prefix[j + 1][c][static_cast<std::size_t>(k)];
      bool found = false;
      for (std::size_t b = 0; b < sub[0].size() && !found; ++b) {
        const auto a = static_cast<std::size_t>(k) - b;
        if (b > static_cast<std::size_t>(k) || a >= before[c].size() || before[c][a] >= kInf) continue;
        for (int cu = 0; cu < 2 && !found; ++cu) {
          if (sub[cu][b] >= kInf) continue;
          if (before[c][a] + sub[cu][b] + (cu != c ? 1 : 0) == goal) {
            stack.push_back({u, {static_cast<int>(b), cu}});
            k = static_cast<int>(a);
            found = true;
          }
        }
      }
      if (!found) throw Error(ErrorCode::InternalInvariant, "tree DP witness reconstruction failed");
    }
  }
  std::sort(res.witness.begin(), res.witness.end());
  return res;
}

HeaviestPath brute_force_heaviest_path(const TreeDecomposition& td) {
  const int nodes = td.num_nodes();
  if (nodes > kBruteForceMaxNodes) {
    throw Error(ErrorCode::EnumerationLimit,
                std::to_string(nodes) + " nodes exceed " + std::to_string(kBruteForceMaxNodes));
  }
  if (nodes == 0) throw Error(ErrorCode::EmptyDecomposition, "no nodes");
  HeaviestPath best;
  best.weight.weight = -1;
  std::vector<NodeId> parent(static_cast<std::size_t>(nodes));
  for (NodeId i = 0; i < nodes; ++i) {
    std::fill(parent.begin(), parent.end(), -2);
    parent[i] = -1;
    std::vector<NodeId> queue{i};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (NodeId j : td.adj[queue[k]]) {
        if (parent[j] == -2) {
          parent[j] = queue[k];
          queue.push_back(j);
        }
      }
    }
    for (NodeId j = i; j < nodes; ++j) {
      if (parent[j] == -2) throw Error(ErrorCode::InvalidDecomposition, "T is not connected");
      TreePath p;
      for (NodeId h = j; h != -1; h = parent[h]) p.nodes.push_back(h);
      std::reverse(p.nodes.begin(), p.nodes.end());
      const WeightReport w = path_weight(td, p);
      if (w.weight > best.weight.weight) best = HeaviestPath{std::move(p), w};
    }
  }
  best.weight.heaviest = true;
  return best;
}

}  // namespace treecut
