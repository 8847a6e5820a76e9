#include "treecut/labeling.hpp"

#include <algorithm>
#include <sstream>

namespace treecut {

PLabeling build_plabeling(const TreeDecomposition& td, const TreePath& path, OpsCounter* ops) {
  if (!is_nonredundant_from_front(td, path)) {
    throw Error(ErrorCode::RedundantPath, "path is not nonredundant from its front");
  }
  const auto n0 = static_cast<std::size_t>(td.graph_n);
  const auto nodes = static_cast<std::size_t>(td.num_nodes());
  PLabeling pl;
  pl.source = &td;
  pl.label_of.assign(n0, -1);
  pl.vertex_at.reserve(n0);
  pl.in_r.assign(n0, 0);
  pl.path_node_of.assign(n0, -1);
  pl.path = path.nodes;
  pl.blocked.assign(nodes, 0);
  pl.trimmed.assign(nodes, 0);
  for (NodeId i : path.nodes) {
    pl.blocked[i] = 1;
    for (VertexId v : td.clusters[i]) pl.in_r[v] = 1;
    tick(ops, 1 + td.clusters[i].size());
  }

  auto label = [&](VertexId v, NodeId owner) {
    pl.label_of[v] = static_cast<int>(pl.vertex_at.size());
    pl.vertex_at.push_back(v);
    pl.path_node_of[v] = owner;
  };

  // Post-order DFS of each hanging tree; the path node itself finishes last.
  // Within R_i, vertices shared with the next path cluster get the largest
  // labels so that label intervals follow the path.
  std::vector<std::pair<NodeId, std::size_t>> stack;
  std::vector<NodeId> parent(nodes, -1);
  std::vector<char> in_next(n0, 0);
  for (std::size_t k = 0; k < path.nodes.size(); ++k) {
    const NodeId i = path.nodes[k];
    const std::vector<VertexId> none;
    const auto& next = k + 1 < path.nodes.size() ? td.clusters[path.nodes[k + 1]] : none;
    for (VertexId v : next) in_next[v] = 1;
    stack.assign(1, {i, 0});
    parent[i] = -1;
    while (!stack.empty()) {
      auto& [h, next] = stack.back();
      if (next < td.adj[h].size()) {
        const NodeId j = td.adj[h][next++];
        tick(ops);
        if (j != parent[h] && !pl.blocked[j]) {
          parent[j] = h;
          stack.emplace_back(j, 0);
        }
        continue;
      }
      if (h == i) {
        for (int shared = 0; shared < 2; ++shared) {
          for (VertexId v : td.clusters[h]) {
            if (pl.label_of[v] == -1 && in_next[v] == shared) label(v, i);
          }
        }
      } else {
        for (VertexId v : td.clusters[h]) {
          if (pl.label_of[v] == -1 && !pl.in_r[v]) label(v, i);
        }
      }
      tick(ops, 1 + td.clusters[h].size());
      stack.pop_back();
    }
    for (VertexId v : next) in_next[v] = 0;
    tick(ops, 2 * next.size());
  }
  pl.n = static_cast<int>(pl.vertex_at.size());
  if (pl.n != td.graph_n) {
    throw Error(ErrorCode::InvalidDecomposition, "some vertex lies in no cluster reachable from P");
  }
  return pl;
}

std::vector<Block> block_layout(const PLabeling& pl, OpsCounter* ops) {
  std::vector<Block> blocks;
  blocks.reserve(pl.path.size());
  for (int l = 0; l < pl.n; ++l) {
    const VertexId v = pl.vertex_at[l];
    const NodeId owner = pl.path_node_of[v];
    const bool r = pl.in_r[v] != 0;
    if (blocks.empty() || blocks.back().node != owner) {
      if (blocks.size() == pl.path.size() || pl.path[blocks.size()] != owner) {
        throw Error(ErrorCode::InternalInvariant, "labels do not follow the path order");
      }
      blocks.push_back(Block{owner, l, 0, l, 0});
    }
    Block& b = blocks.back();
    if (r) {
      if (b.r_len == 0) b.r_first = l;
      ++b.r_len;
    } else {
      if (b.r_len > 0) throw Error(ErrorCode::InternalInvariant, "S label after R label in a block");
      ++b.s_len;
      b.r_first = l + 1;
    }
  }
  tick(ops, static_cast<std::uint64_t>(pl.n) + pl.path.size());
  if (blocks.size() != pl.path.size()) {
    throw Error(ErrorCode::InternalInvariant, "some path node owns no label");
  }
  for (const Block& b : blocks) {
    if (b.r_len == 0) throw Error(ErrorCode::InternalInvariant, "empty R_i");
  }
  return blocks;
}

std::vector<NodeId> hanging_tree(const PLabeling& pl, NodeId i, OpsCounter* ops) {
  std::vector<NodeId> out{i};
  if (pl.trimmed[i]) return out;
  const TreeDecomposition& td = *pl.source;
  std::vector<std::pair<NodeId, NodeId>> stack{{i, -1}};
  while (!stack.empty()) {
    const auto [h, par] = stack.back();
    stack.pop_back();
    for (NodeId j : td.adj[h]) {
      tick(ops);
      if (j != par && !pl.blocked[j]) {
        out.push_back(j);
        stack.emplace_back(j, h);
      }
    }
  }
  return out;
}

TreeDecomposition materialize(const PLabeling& pl) {
  const TreeDecomposition& td = *pl.source;
  TreeDecomposition out;
  out.graph_n = pl.n;
  std::vector<NodeId> local(static_cast<std::size_t>(td.num_nodes()), -1);
  std::vector<std::pair<NodeId, NodeId>> edges;
  auto add_node = [&](NodeId h) {
    local[h] = out.num_nodes();
    out.clusters.emplace_back();
    for (VertexId v : td.clusters[h]) {
      if (pl.is_current(v)) out.clusters.back().push_back(pl.label_of[v]);
    }
  };
  for (std::size_t k = 0; k < pl.path.size(); ++k) {
    add_node(pl.path[k]);
    if (k > 0) edges.emplace_back(local[pl.path[k - 1]], local[pl.path[k]]);
  }
  for (NodeId i : pl.path) {
    if (pl.trimmed[i]) continue;
    std::vector<std::pair<NodeId, NodeId>> stack{{i, -1}};
    while (!stack.empty()) {
      const auto [h, par] = stack.back();
      stack.pop_back();
      for (NodeId j : td.adj[h]) {
        if (j != par && !pl.blocked[j]) {
          add_node(j);
          edges.emplace_back(local[h], local[j]);
          stack.emplace_back(j, h);
        }
      }
    }
  }
  out.adj.assign(out.clusters.size(), {});
  for (const auto& [a, b] : edges) {
    out.adj[a].push_back(b);
    out.adj[b].push_back(a);
  }
  return out;
}

std::string dump_plabeling(const PLabeling& pl) {
  std::ostringstream os;
  auto interval = [&](int first, int len) {
    if (len == 0) {
      os << "-";
    } else {
      os << "[" << first + 1 << "," << first + len << "]";
    }
  };
  for (const Block& b : block_layout(pl)) {
    os << "node " << b.node + 1 << ": S=";
    interval(b.s_first, b.s_len);
    os << " R=";
    interval(b.r_first, b.r_len);
    os << "\n";
  }
  return os.str();
}

std::vector<Edge> cluster_boundary_edges(const Graph& g, const TreeDecomposition& td, NodeId i) {
  std::vector<Edge> out;
  for (VertexId v : td.clusters[i]) {
    for (VertexId w : g.neighbors(v)) out.emplace_back(std::min(v, w), std::max(v, w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<VertexId>> NodeParts::parts() const {
  std::vector<std::vector<VertexId>> out;
  if (!prefix.empty()) out.push_back(prefix);
  for (VertexId v : r_singletons) out.push_back({v});
  if (!s_part.empty()) out.push_back(s_part);
  if (!suffix.empty()) out.push_back(suffix);
  return out;
}

NodeParts decompose_by_node(const Graph& g, const TreeDecomposition& td, const PLabeling& pl,
                            NodeId i) {
  (void)td;
  if (pl.n != g.num_vertices()) {
    throw Error(ErrorCode::InternalInvariant, "labeling does not cover the graph");
  }
  const auto blocks = block_layout(pl);
  std::size_t k = 0;
  while (k < blocks.size() && blocks[k].node != i) ++k;
  if (k == blocks.size()) throw Error(ErrorCode::InternalInvariant, "node is not on the path");
  const Block& b = blocks[k];
  NodeParts parts;
  for (int l = 0; l < b.s_first; ++l) parts.prefix.push_back(pl.vertex_at[l]);
  for (int l = b.s_first; l < b.r_first; ++l) parts.s_part.push_back(pl.vertex_at[l]);
  for (int l = b.r_first; l < b.r_first + b.r_len; ++l) parts.r_singletons.push_back(pl.vertex_at[l]);
  for (int l = b.r_first + b.r_len; l < pl.n; ++l) parts.suffix.push_back(pl.vertex_at[l]);
  return parts;
}

}  // namespace treecut
