#include "treecut/tree_decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace treecut {

TreeDecomposition TreeDecomposition::from_edges(int graph_n,
                                                std::vector<std::vector<VertexId>> clusters,
                                                std::span<const std::pair<NodeId, NodeId>> edges) {
  if (graph_n < 0) throw Error(ErrorCode::InvalidDecomposition, "negative vertex count");
  TreeDecomposition td;
  td.graph_n = graph_n;
  td.clusters = std::move(clusters);
  const int nodes = td.num_nodes();
  std::vector<int> stamp(static_cast<std::size_t>(graph_n), -1);
  for (NodeId i = 0; i < nodes; ++i) {
    for (VertexId v : td.clusters[i]) {
      if (v < 0 || v >= graph_n) {
        throw Error(ErrorCode::InvalidDecomposition,
                    "node " + std::to_string(i) + " holds out-of-range vertex " + std::to_string(v));
      }
      if (stamp[v] == i) {
        throw Error(ErrorCode::InvalidDecomposition,
                    "node " + std::to_string(i) + " lists vertex " + std::to_string(v) + " twice");
      }
      stamp[v] = i;
    }
  }
  td.adj.assign(static_cast<std::size_t>(nodes), {});
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b) {
      throw Error(ErrorCode::InvalidDecomposition,
                  "bad tree edge " + std::to_string(a) + "," + std::to_string(b));
    }
    td.adj[a].push_back(b);
    td.adj[b].push_back(a);
  }
  return td;
}

std::vector<std::pair<NodeId, NodeId>> TreeDecomposition::tree_edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId i = 0; i < num_nodes(); ++i) {
    for (NodeId j : adj[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const TreeDecomposition& a, const TreeDecomposition& b) {
  return a.graph_n == b.graph_n && a.clusters == b.clusters && a.tree_edges() == b.tree_edges();
}

std::string ValidityReport::describe() const {
  if (ok()) return "valid";
  std::ostringstream os;
  const char* sep = "";
  if (!tree_ok) {
    os << "T is not a tree";
    sep = "; ";
  }
  if (!t1_ok) {
    os << sep << "(T1) vertex " << *uncovered_vertex + 1 << " is in no cluster";
    sep = "; ";
  }
  if (!t2_ok) {
    os << sep << "(T2) edge {" << uncovered_edge->first + 1 << "," << uncovered_edge->second + 1
       << "} is in no cluster";
    sep = "; ";
  }
  if (!t3_ok) {
    os << sep << "(T3') nodes holding vertex " << *disconnected_vertex + 1 << " are disconnected";
  }
  return os.str();
}

namespace {

// BFS order of T from node 0 with parents; empty if T is not connected.
bool bfs_tree(const TreeDecomposition& td, std::vector<NodeId>& order, std::vector<NodeId>& parent) {
  const int nodes = td.num_nodes();
  order.clear();
  parent.assign(static_cast<std::size_t>(nodes), -2);
  if (nodes == 0) return false;
  parent[0] = -1;
  order.push_back(0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    const NodeId i = order[k];
    for (NodeId j : td.adj[i]) {
      if (parent[j] == -2) {
        parent[j] = i;
        order.push_back(j);
      }
    }
  }
  return static_cast<int>(order.size()) == nodes;
}

bool is_tree_shape(const TreeDecomposition& td, std::vector<NodeId>& order,
                   std::vector<NodeId>& parent) {
  std::size_t degree_sum = 0;
  for (const auto& a : td.adj) degree_sum += a.size();
  if (degree_sum != 2 * (td.adj.size() - (td.adj.empty() ? 0 : 1))) return false;
  return bfs_tree(td, order, parent);
}

}  // namespace

ValidityReport validate(const Graph& g, const TreeDecomposition& td) {
  ValidityReport rep;
  const int n = g.num_vertices();
  std::vector<NodeId> order, parent;
  rep.tree_ok = td.graph_n == n && is_tree_shape(td, order, parent);

  const auto nz = static_cast<std::size_t>(n);
  std::vector<int> node_count(nz, 0);
  for (const auto& cluster : td.clusters) {
    for (VertexId v : cluster) {
      if (v >= 0 && v < n) ++node_count[v];
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (node_count[v] == 0) {
      rep.t1_ok = false;
      rep.uncovered_vertex = v;
      break;
    }
  }

  // (T2): mark the adjacency slots of every edge seen inside some cluster.
  std::vector<std::size_t> offset(nz + 1, 0);
  for (VertexId v = 0; v < n; ++v) offset[v + 1] = offset[v] + static_cast<std::size_t>(g.degree(v));
  std::vector<char> covered(offset[nz], 0);
  std::vector<int> stamp(nz, -1);
  for (NodeId i = 0; i < td.num_nodes(); ++i) {
    for (VertexId v : td.clusters[i]) {
      if (v >= 0 && v < n) stamp[v] = i;
    }
    for (VertexId v : td.clusters[i]) {
      if (v < 0 || v >= n) continue;
      const auto nbrs = g.neighbors(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (stamp[nbrs[k]] == i) covered[offset[v] + k] = 1;
      }
    }
  }
  for (VertexId v = 0; v < n && rep.t2_ok; ++v) {
    const auto nbrs = g.neighbors(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (v < nbrs[k] && !covered[offset[v] + k]) {
        rep.t2_ok = false;
        rep.uncovered_edge = Edge{v, nbrs[k]};
        break;
      }
    }
  }

  // (T3'): in a tree, I_v is connected iff it spans |I_v| - 1 tree edges.
  if (rep.tree_ok) {
    std::vector<int> edge_count(nz, 0);
    std::fill(stamp.begin(), stamp.end(), -1);
    for (NodeId i : order) {
      for (VertexId v : td.clusters[i]) stamp[v] = i;
      for (NodeId j : td.adj[i]) {
        if (parent[j] == i) {
          for (VertexId v : td.clusters[j]) {
            if (stamp[v] == i) ++edge_count[v];
          }
        }
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      if (node_count[v] > 0 && edge_count[v] != node_count[v] - 1) {
        rep.t3_ok = false;
        rep.disconnected_vertex = v;
        break;
      }
    }
  } else {
    rep.t3_ok = false;
  }
  return rep;
}

std::int64_t size(const TreeDecomposition& td) {
  std::int64_t s = td.num_nodes();
  for (const auto& c : td.clusters) s += static_cast<std::int64_t>(c.size());
  return s;
}

int width(const TreeDecomposition& td) {
  std::size_t t = 0;
  for (const auto& c : td.clusters) t = std::max(t, c.size());
  return static_cast<int>(t) - 1;
}

TreeDecomposition make_nonredundant(const TreeDecomposition& td, OpsCounter* ops,
                                    std::vector<NodeId>* node_map) {
  const int nodes = td.num_nodes();
  bool any = false;
  for (const auto& c : td.clusters) any = any || !c.empty();
  if (!any) throw Error(ErrorCode::EmptyDecomposition, "all clusters are empty");

  // Output node q takes its cluster from input node src[q]; rep maps each
  // input node to the output node it was contracted into.
  std::vector<NodeId> src{0};
  std::vector<std::pair<NodeId, NodeId>> out_edges;
  std::vector<NodeId> rep(static_cast<std::size_t>(nodes), -1);
  std::vector<char> seen(static_cast<std::size_t>(td.graph_n), 0);
  rep[0] = 0;
  for (VertexId v : td.clusters[0]) seen[v] = 1;
  tick(ops, 1 + td.clusters[0].size());

  std::vector<std::pair<NodeId, std::size_t>> stack{{0, 0}};
  while (!stack.empty()) {
    auto& [i, next] = stack.back();
    if (next == td.adj[i].size()) {
      stack.pop_back();
      continue;
    }
    const NodeId j = td.adj[i][next++];
    tick(ops);
    if (rep[j] != -1) continue;
    const NodeId rp = rep[i];
    const auto& xj = td.clusters[j];
    std::size_t c = 0;
    for (VertexId v : xj) c += seen[v];
    tick(ops, 2 * xj.size());
    if (c == xj.size()) {
      rep[j] = rp;
    } else if (c == td.clusters[src[rp]].size()) {
      src[rp] = j;
      rep[j] = rp;
    } else {
      rep[j] = static_cast<NodeId>(src.size());
      src.push_back(j);
      out_edges.emplace_back(rp, rep[j]);
    }
    for (VertexId v : xj) seen[v] = 1;
    stack.emplace_back(j, 0);
  }

  TreeDecomposition out;
  out.graph_n = td.graph_n;
  out.clusters.reserve(src.size());
  for (NodeId s : src) out.clusters.push_back(td.clusters[s]);
  out.adj.assign(src.size(), {});
  for (const auto& [a, b] : out_edges) {
    out.adj[a].push_back(b);
    out.adj[b].push_back(a);
  }
  if (node_map != nullptr) *node_map = std::move(rep);
  return out;
}

bool is_nonredundant(const TreeDecomposition& td) {
  std::vector<int> stamp(static_cast<std::size_t>(td.graph_n), -1);
  for (NodeId i = 0; i < td.num_nodes(); ++i) {
    for (NodeId j : td.adj[i]) {
      if (j < i) continue;
      for (VertexId v : td.clusters[i]) stamp[v] = i;
      std::size_t common = 0;
      for (VertexId v : td.clusters[j]) common += stamp[v] == i;
      if (common == td.clusters[i].size() || common == td.clusters[j].size()) return false;
    }
  }
  return true;
}

TreeDecomposition restrict(const TreeDecomposition& td, std::span<const NodeId> keep,
                           std::span<const VertexId> new_id, int new_n,
                           std::optional<std::pair<NodeId, NodeId>> extra_edge, OpsCounter* ops) {
  std::vector<NodeId> local(static_cast<std::size_t>(td.num_nodes()), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) {
    if (local[keep[k]] != -1) {
      throw Error(ErrorCode::DisconnectedKeepTree, "node listed twice in keep set");
    }
    local[keep[k]] = static_cast<NodeId>(k);
  }
  TreeDecomposition out;
  out.graph_n = new_n;
  out.clusters.resize(keep.size());
  out.adj.resize(keep.size());
  std::size_t edge_count = 0;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const NodeId i = keep[k];
    for (VertexId v : td.clusters[i]) {
      if (new_id[v] >= 0) out.clusters[k].push_back(new_id[v]);
    }
    for (NodeId j : td.adj[i]) {
      if (local[j] >= 0) {
        out.adj[k].push_back(local[j]);
        ++edge_count;
      }
    }
    tick(ops, 1 + td.clusters[i].size() + td.adj[i].size());
  }
  edge_count /= 2;
  if (extra_edge) {
    const NodeId a = local[extra_edge->first];
    const NodeId b = local[extra_edge->second];
    if (a < 0 || b < 0) throw Error(ErrorCode::DisconnectedKeepTree, "extra edge leaves keep set");
    out.adj[a].push_back(b);
    out.adj[b].push_back(a);
    ++edge_count;
  }
  std::vector<NodeId> order, parent;
  if (keep.empty() || edge_count + 1 != keep.size() || !bfs_tree(out, order, parent)) {
    throw Error(ErrorCode::DisconnectedKeepTree, "kept nodes do not form a tree");
  }
  return out;
}

std::vector<VertexId> subset_renaming(int n, std::span<const VertexId> subset) {
  std::vector<VertexId> id(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < subset.size(); ++k) id[subset[k]] = static_cast<VertexId>(k);
  return id;
}

namespace {

// Weighted sweep from `start`: w(start, i) = w(start, parent) + |X^i| - c_i.
// Returns the first-discovered node of maximum weight and fills parent.
NodeId weighted_sweep(const TreeDecomposition& td, NodeId start, std::vector<NodeId>& parent,
                      std::vector<std::int64_t>& w, OpsCounter* ops) {
  const auto nodes = static_cast<std::size_t>(td.num_nodes());
  std::vector<char> seen(static_cast<std::size_t>(td.graph_n), 0);
  parent.assign(nodes, -2);
  w.assign(nodes, 0);
  parent[start] = -1;
  w[start] = static_cast<std::int64_t>(td.clusters[start].size());
  for (VertexId v : td.clusters[start]) seen[v] = 1;
  tick(ops, 1 + td.clusters[start].size());
  NodeId best = start;
  std::vector<std::pair<NodeId, std::size_t>> stack{{start, 0}};
  while (!stack.empty()) {
    auto& [i, next] = stack.back();
    if (next == td.adj[i].size()) {
      stack.pop_back();
      continue;
    }
    const NodeId j = td.adj[i][next++];
    tick(ops);
    if (parent[j] != -2) continue;
    parent[j] = i;
    std::int64_t fresh = 0;
    for (VertexId v : td.clusters[j]) {
      fresh += !seen[v];
      seen[v] = 1;
    }
    tick(ops, td.clusters[j].size());
    w[j] = w[i] + fresh;
    if (w[j] > w[best]) best = j;
    stack.emplace_back(j, 0);
  }
  return best;
}

}  // namespace

HeaviestPath heaviest_path(const TreeDecomposition& td, OpsCounter* ops) {
  if (td.num_nodes() == 0) throw Error(ErrorCode::EmptyDecomposition, "no nodes");
  if (td.graph_n == 0) throw Error(ErrorCode::EmptyDecomposition, "empty vertex universe");
  std::vector<NodeId> parent;
  std::vector<std::int64_t> w;
  const NodeId s = weighted_sweep(td, 0, parent, w, ops);
  const NodeId t = weighted_sweep(td, s, parent, w, ops);
  HeaviestPath hp;
  for (NodeId i = t; i != -1; i = parent[i]) hp.path.nodes.push_back(i);
  std::reverse(hp.path.nodes.begin(), hp.path.nodes.end());
  hp.weight.weight = w[t];
  hp.weight.relative = Fraction(w[t], td.graph_n);
  hp.weight.heaviest = true;
  return hp;
}

namespace {

void check_path(const TreeDecomposition& td, const TreePath& p) {
  if (p.nodes.empty()) throw Error(ErrorCode::InvalidDecomposition, "empty path");
  std::vector<char> on(static_cast<std::size_t>(td.num_nodes()), 0);
  for (std::size_t k = 0; k < p.nodes.size(); ++k) {
    const NodeId i = p.nodes[k];
    if (i < 0 || i >= td.num_nodes() || on[i]) {
      throw Error(ErrorCode::InvalidDecomposition, "path repeats or leaves T");
    }
    on[i] = 1;
    if (k > 0) {
      const auto& a = td.adj[p.nodes[k - 1]];
      if (std::find(a.begin(), a.end(), i) == a.end()) {
        throw Error(ErrorCode::InvalidDecomposition, "consecutive path nodes are not adjacent");
      }
    }
  }
}

bool nonredundant_from(const TreeDecomposition& td, const std::vector<NodeId>& nodes) {
  if (td.clusters[nodes.front()].empty()) return false;
  std::vector<int> stamp(static_cast<std::size_t>(td.graph_n), -1);
  for (std::size_t h = 1; h < nodes.size(); ++h) {
    const NodeId prev = nodes[h - 1];
    for (VertexId v : td.clusters[prev]) stamp[v] = prev;
    bool contained = true;
    for (VertexId v : td.clusters[nodes[h]]) contained = contained && stamp[v] == prev;
    if (contained) return false;
  }
  return true;
}

}  // namespace

WeightReport path_weight(const TreeDecomposition& td, const TreePath& p) {
  check_path(td, p);
  if (td.graph_n == 0) throw Error(ErrorCode::EmptyDecomposition, "empty vertex universe");
  std::vector<char> seen(static_cast<std::size_t>(td.graph_n), 0);
  std::int64_t w = 0;
  for (NodeId i : p.nodes) {
    for (VertexId v : td.clusters[i]) {
      w += !seen[v];
      seen[v] = 1;
    }
  }
  return WeightReport{w, Fraction(w, td.graph_n), false};
}

bool is_nonredundant_from_front(const TreeDecomposition& td, const TreePath& p) {
  check_path(td, p);
  return nonredundant_from(td, p.nodes);
}

NonredundantEnd is_nonredundant_path(const TreeDecomposition& td, const TreePath& p) {
  check_path(td, p);
  if (nonredundant_from(td, p.nodes)) return {true, true};
  std::vector<NodeId> reversed(p.nodes.rbegin(), p.nodes.rend());
  if (nonredundant_from(td, reversed)) return {true, false};
  return {false, false};
}

TreeDecomposition tree_to_width1_td(const Graph& g) {
  const auto longest = longest_path_in_tree(g);
  const int n = g.num_vertices();
  TreeDecomposition td;
  td.graph_n = n;
  if (n == 1) {
    td.clusters = {{0}};
    td.adj = {{}};
    return td;
  }
  const VertexId root = std::min(longest.front(), longest.back());
  std::vector<VertexId> order{root};
  std::vector<VertexId> parent(static_cast<std::size_t>(n), -2);
  parent[root] = -1;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (VertexId w : g.neighbors(order[k])) {
      if (parent[w] == -2) {
        parent[w] = order[k];
        order.push_back(w);
      }
    }
  }
  // Node of v (v != root) carries the edge {parent(v), v}.
  std::vector<NodeId> node_of(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 1; k < order.size(); ++k) {
    const VertexId v = order[k];
    node_of[v] = static_cast<NodeId>(td.clusters.size());
    td.clusters.push_back({parent[v], v});
  }
  td.adj.assign(td.clusters.size(), {});
  NodeId last_root_child = -1;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const VertexId v = order[k];
    const VertexId p = parent[v];
    NodeId attach;
    if (p == root) {
      attach = last_root_child;
      last_root_child = node_of[v];
    } else {
      attach = node_of[p];
    }
    if (attach >= 0) {
      td.adj[attach].push_back(node_of[v]);
      td.adj[node_of[v]].push_back(attach);
    }
  }
  return td;
}

}  // namespace treecut
