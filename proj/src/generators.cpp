#include "treecut/generators.hpp"

#include <algorithm>

namespace treecut {

namespace {

void need(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadSize, what);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph spider_graph(int legs, int length) {
  const int n = 1 + legs * length;
  std::vector<Edge> edges;
  for (int l = 0; l < legs; ++l) {
    for (int d = 0; d < length; ++d) {
      const int v = 1 + l * length + d;
      edges.emplace_back(d == 0 ? 0 : v - 1, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph caterpillar_graph(int spine, int leaves) {
  const int n = spine * (1 + leaves);
  std::vector<Edge> edges;
  for (int s = 1; s < spine; ++s) edges.emplace_back(s - 1, s);
  int next = spine;
  for (int s = 0; s < spine; ++s) {
    for (int j = 0; j < leaves; ++j) edges.emplace_back(s, next++);
  }
  return Graph::from_edges(n, edges);
}

// Vertices numbered in BFS order; the children of v are 3v+1, 3v+2, 3v+3.
Graph ternary_graph(int h) {
  int n = 1;
  for (int d = 0, level = 1; d < h; ++d) {
    level *= 3;
    n += level;
  }
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 3, v);
  return Graph::from_edges(n, edges);
}

Graph prufer_tree(int n, std::mt19937_64& rng) {
  if (n == 1) return Graph(1);
  if (n == 2) {
    const Edge e{0, 1};
    return Graph::from_edges(2, std::span<const Edge>(&e, 1));
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = static_cast<int>(draw(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  // Linear decoding: `ptr` scans for the smallest leaf, `leaf` follows chains.
  std::vector<Edge> edges;
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int c : code) {
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
  return Graph::from_edges(n, edges);
}

Instance grid_instance(int k) {
  Instance inst;
  const int n = k * k;
  std::vector<Edge> edges;
  for (int r = 0; r < k; ++r) {
    for (int c = 0; c < k; ++c) {
      const int v = r * k + c;
      if (c + 1 < k) edges.emplace_back(v, v + 1);
      if (r + 1 < k) edges.emplace_back(v, v + k);
    }
  }
  inst.g = Graph::from_edges(n, edges);
  // Windows of k + 1 consecutive row-major vertices cover every edge.
  std::vector<std::vector<VertexId>> clusters;
  if (k == 1) {
    clusters.push_back({0});
  } else {
    for (int j = 0; j + k < n; ++j) {
      clusters.emplace_back();
      for (int v = j; v <= j + k; ++v) clusters.back().push_back(v);
    }
  }
  std::vector<std::pair<NodeId, NodeId>> tree;
  for (std::size_t j = 1; j < clusters.size(); ++j) {
    tree.emplace_back(static_cast<NodeId>(j - 1), static_cast<NodeId>(j));
  }
  inst.td = TreeDecomposition::from_edges(n, std::move(clusters), tree);
  return inst;
}

// Grows a k-tree one vertex at a time, attaching each new vertex to k vertices
// of a random existing bag, and keeps every k-tree edge with probability 1/2.
Instance partial_ktree_instance(int n, int k, std::mt19937_64& rng) {
  Instance inst;
  std::vector<std::vector<VertexId>> clusters;
  std::vector<std::pair<NodeId, NodeId>> tree;
  std::vector<Edge> edges;
  auto maybe_edge = [&](VertexId a, VertexId b) {
    if (draw(rng, 2) == 1) edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  clusters.emplace_back();
  for (VertexId v = 0; v <= k; ++v) {
    for (VertexId u : clusters[0]) maybe_edge(u, v);
    clusters[0].push_back(v);
  }
  for (VertexId v = k + 1; v < n; ++v) {
    const auto j = static_cast<NodeId>(draw(rng, clusters.size()));
    std::vector<VertexId> bag = clusters[j];
    bag.erase(bag.begin() + static_cast<std::ptrdiff_t>(draw(rng, bag.size())));
    for (VertexId u : bag) maybe_edge(u, v);
    bag.push_back(v);
    tree.emplace_back(j, static_cast<NodeId>(clusters.size()));
    clusters.push_back(std::move(bag));
  }
  inst.g = Graph::from_edges(n, edges);
  inst.td = TreeDecomposition::from_edges(n, std::move(clusters), tree);
  return inst;
}

}  // namespace

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::BadSize, "empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Star: return "star";
    case Family::Spider: return "spider";
    case Family::Caterpillar: return "caterpillar";
    case Family::Ternary: return "ternary";
    case Family::RandomTree: return "random-tree";
    case Family::Grid: return "grid";
    case Family::PartialKTree: return "partial-ktree";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::Path, Family::Star, Family::Spider, Family::Caterpillar,
                   Family::Ternary, Family::RandomTree, Family::Grid, Family::PartialKTree}) {
    if (name == to_string(f)) return f;
  }
  throw Error(ErrorCode::ParseError, "unknown family `" + name + "`");
}

std::string InstanceSpec::id() const {
  const std::string f = to_string(family);
  const std::string s = std::to_string(seed);
  switch (family) {
    case Family::Path:
    case Family::Star: return f + "-n" + std::to_string(n);
    case Family::Spider: return f + "-" + std::to_string(legs) + "x" + std::to_string(length);
    case Family::Caterpillar: return f + "-n" + std::to_string(n) + "-k" + std::to_string(k);
    case Family::Ternary: return f + "-h" + std::to_string(h);
    case Family::RandomTree: return f + "-n" + std::to_string(n) + "-s" + s;
    case Family::Grid: return f + "-k" + std::to_string(k);
    case Family::PartialKTree:
      return f + "-n" + std::to_string(n) + "-k" + std::to_string(k) + "-s" + s;
  }
  return f;
}

Instance generate(const InstanceSpec& spec) {
  Instance inst;
  std::mt19937_64 rng(spec.seed);
  bool tree = true;
  switch (spec.family) {
    case Family::Path:
      need(spec.n >= 1, "path needs n >= 1");
      inst.g = path_graph(spec.n);
      break;
    case Family::Star:
      need(spec.n >= 1, "star needs n >= 1");
      inst.g = star_graph(spec.n);
      break;
    case Family::Spider:
      need(spec.legs >= 1 && spec.length >= 1, "spider needs legs >= 1 and length >= 1");
      inst.g = spider_graph(spec.legs, spec.length);
      break;
    case Family::Caterpillar:
      need(spec.n >= 1 && spec.k >= 0, "caterpillar needs n >= 1 and k >= 0");
      inst.g = caterpillar_graph(spec.n, spec.k);
      break;
    case Family::Ternary:
      need(spec.h >= 0 && spec.h <= 12, "ternary needs 0 <= h <= 12");
      inst.g = ternary_graph(spec.h);
      break;
    case Family::RandomTree:
      need(spec.n >= 1, "random-tree needs n >= 1");
      inst.g = prufer_tree(spec.n, rng);
      break;
    case Family::Grid:
      need(spec.k >= 1 && spec.k <= 3000, "grid needs 1 <= k <= 3000");
      inst = grid_instance(spec.k);
      tree = false;
      break;
    case Family::PartialKTree:
      need(spec.k >= 0 && spec.n >= spec.k + 1, "partial-ktree needs n >= k + 1 >= 1");
      inst = partial_ktree_instance(spec.n, spec.k, rng);
      tree = false;
      break;
  }
  if (tree) inst.td = tree_to_width1_td(inst.g);
  inst.spec = spec;
  const ValidityReport vr = validate(inst.g, inst.td);
  if (!vr.ok()) throw Error(ErrorCode::InternalInvariant, spec.id() + ": " + vr.describe());
  return inst;
}

}  // namespace treecut
