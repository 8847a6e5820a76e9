#include "treecut/graph.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

namespace treecut {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::PartitionInvalid: return "PartitionInvalid";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::EmptyDecomposition: return "EmptyDecomposition";
    case ErrorCode::DisconnectedKeepTree: return "DisconnectedKeepTree";
    case ErrorCode::RedundantPath: return "RedundantPath";
    case ErrorCode::BadFraction: return "BadFraction";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::EnumerationLimit: return "EnumerationLimit";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Fraction parse_fraction(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::BadFraction, "cannot parse '" + text + "'");
    }
    return v;
  };
  const std::string_view sv(text);
  if (auto slash = sv.find('/'); slash != std::string_view::npos) {
    return Fraction(parse_int(sv.substr(0, slash)), parse_int(sv.substr(slash + 1)));
  }
  if (auto dot = sv.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = sv.substr(0, dot);
    const std::string_view frac = sv.substr(dot + 1);
    if (frac.size() > 15) throw Error(ErrorCode::BadFraction, "too many digits in '" + text + "'");
    std::int64_t den = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) den *= 10;
    const std::int64_t w = whole.empty() ? 0 : parse_int(whole);
    const std::int64_t f = frac.empty() ? 0 : parse_int(frac);
    return Fraction(w * den + f, den);
  }
  return Fraction(parse_int(sv), 1);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::InvalidGraph, "negative vertex count");
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::InvalidGraph,
                  "edge endpoint out of range: " + std::to_string(u) + "," + std::to_string(v));
    }
    if (u == v) throw Error(ErrorCode::InvalidGraph, "self-loop at " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  g.num_edges_ = static_cast<int>(edges.size());
  // Parallel edges show up as repeated neighbors.
  std::vector<int> seen(static_cast<std::size_t>(n), -1);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.adj_[v]) {
      if (seen[w] == v) {
        throw Error(ErrorCode::InvalidGraph,
                    "parallel edge " + std::to_string(v) + "," + std::to_string(w));
      }
      seen[w] = v;
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(num_edges_));
  for (VertexId v = 0; v < num_vertices(); ++v) {
    for (VertexId w : adj_[v]) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::induced(std::span<const VertexId> vertices) const {
  std::vector<int> local(adj_.size(), -1);
  for (std::size_t k = 0; k < vertices.size(); ++k) local[vertices[k]] = static_cast<int>(k);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    for (VertexId w : adj_[vertices[k]]) {
      if (local[w] > static_cast<int>(k)) edges.emplace_back(static_cast<int>(k), local[w]);
    }
  }
  return from_edges(static_cast<int>(vertices.size()), edges);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.num_vertices() == b.num_vertices() && a.edges() == b.edges();
}

Partition Partition::from_classes(int n, const std::vector<std::vector<VertexId>>& classes) {
  Partition p;
  p.class_of.assign(static_cast<std::size_t>(n), -1);
  p.num_classes = static_cast<int>(classes.size());
  int covered = 0;
  for (int c = 0; c < p.num_classes; ++c) {
    for (VertexId v : classes[c]) {
      if (v < 0 || v >= n) {
        throw Error(ErrorCode::PartitionInvalid, "vertex " + std::to_string(v) + " out of range");
      }
      if (p.class_of[v] != -1) {
        throw Error(ErrorCode::PartitionInvalid, "vertex " + std::to_string(v) + " in two classes");
      }
      p.class_of[v] = c;
      ++covered;
    }
  }
  if (covered != n) throw Error(ErrorCode::PartitionInvalid, "classes do not cover all vertices");
  return p;
}

Partition Partition::bipartition(int n, std::span<const VertexId> black) {
  Partition p;
  p.class_of.assign(static_cast<std::size_t>(n), 1);
  p.num_classes = 2;
  for (VertexId v : black) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::PartitionInvalid, "vertex " + std::to_string(v) + " out of range");
    }
    if (p.class_of[v] == 0) {
      throw Error(ErrorCode::PartitionInvalid, "vertex " + std::to_string(v) + " listed twice");
    }
    p.class_of[v] = 0;
  }
  return p;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int cut_width(const Graph& g, const Partition& p) {
  if (static_cast<int>(p.class_of.size()) != g.num_vertices()) {
    throw Error(ErrorCode::PartitionInvalid, "partition size differs from vertex count");
  }
  int width = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (p.class_of[v] < 0 || p.class_of[v] >= p.num_classes) {
      throw Error(ErrorCode::PartitionInvalid, "vertex " + std::to_string(v) + " unassigned");
    }
    for (VertexId w : g.neighbors(v)) {
      if (v < w && p.class_of[v] != p.class_of[w]) ++width;
    }
  }
  return width;
}

int cut_width(const Graph& g, std::span<const VertexId> black) {
  return cut_width(g, Partition::bipartition(g.num_vertices(), black));
}

int tri_cut_width(const Graph& g, std::span<const VertexId> b, std::span<const VertexId> w,
                  std::span<const VertexId> z) {
  std::vector<int> cls(static_cast<std::size_t>(g.num_vertices()), -1);
  int idx = 0;
  for (auto part : {b, w, z}) {
    for (VertexId v : part) {
      if (cls[v] != -1) throw Error(ErrorCode::PartitionInvalid, "classes overlap");
      cls[v] = idx;
    }
    ++idx;
  }
  int width = 0;
  for (auto part : {b, w, z}) {
    for (VertexId v : part) {
      for (VertexId u : g.neighbors(v)) {
        if (v < u && cls[u] != -1 && cls[u] != cls[v]) ++width;
      }
    }
  }
  return width;
}

namespace {

// BFS from `source`; returns the farthest vertex (smallest id among ties) and
// fills dist/parent for the component of `source`.
VertexId farthest_from(const Graph& g, VertexId source, std::vector<int>& dist,
                       std::vector<VertexId>& parent, std::vector<VertexId>& touched) {
  std::queue<VertexId> q;
  dist[source] = 0;
  parent[source] = -1;
  touched.push_back(source);
  q.push(source);
  VertexId best = source;
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    if (dist[v] > dist[best] || (dist[v] == dist[best] && v < best)) best = v;
    for (VertexId w : g.neighbors(v)) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        parent[w] = v;
        touched.push_back(w);
        q.push(w);
      }
    }
  }
  return best;
}

int count_components(const Graph& g) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<VertexId> parent(dist.size()), touched;
  int comps = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] == -1) {
      farthest_from(g, v, dist, parent, touched);
      ++comps;
    }
  }
  return comps;
}

}  // namespace

bool is_forest(const Graph& g) {
  return g.num_edges() == g.num_vertices() - count_components(g);
}

bool is_tree(const Graph& g) {
  return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 && count_components(g) == 1;
}

std::vector<VertexId> longest_path_in_tree(const Graph& g) {
  if (!is_tree(g)) throw Error(ErrorCode::NotATree, "graph is not a tree");
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> dist(n, -1);
  std::vector<VertexId> parent(n, -1), touched;
  const VertexId a = farthest_from(g, 0, dist, parent, touched);
  std::fill(dist.begin(), dist.end(), -1);
  const VertexId b = farthest_from(g, a, dist, parent, touched);
  std::vector<VertexId> path;
  for (VertexId v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

Fraction relative_diameter(const Graph& g) {
  if (g.num_vertices() == 0) throw Error(ErrorCode::NotAForest, "empty graph");
  if (!is_forest(g)) throw Error(ErrorCode::NotAForest, "graph has a cycle");
  const auto n = static_cast<std::size_t>(g.num_vertices());
  std::vector<int> dist(n, -1), dist2(n, -1);
  std::vector<VertexId> parent(n, -1), touched, touched2;
  std::int64_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] != -1) continue;
    const VertexId a = farthest_from(g, v, dist, parent, touched);
    const VertexId b = farthest_from(g, a, dist2, parent, touched2);
    total += dist2[b] + 1;
  }
  return Fraction(total, static_cast<std::int64_t>(n));
}

}  // namespace treecut
