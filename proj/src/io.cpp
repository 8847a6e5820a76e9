#include "treecut/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace treecut {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(e.what());
  }
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
    parse_error(std::string(what) + " out of range");
  }
  return static_cast<int>(v);
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) parse_error(std::string("missing field \"") + key + "\"");
  return obj.at(key);
}

Edge one_based_edge(int u, int v, int n, int line) {
  if (u < 1 || u > n || v < 1 || v > n) {
    parse_error("line " + std::to_string(line) + ": vertex id outside 1.." + std::to_string(n));
  }
  return {u - 1, v - 1};
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    ls.seekg(0);
    long long a, b;
    if (!(ls >> a >> b)) parse_error("line " + std::to_string(lineno) + ": expected two integers");
    std::string rest;
    if (ls >> rest) parse_error("line " + std::to_string(lineno) + ": trailing text");
    if (n < 0) {
      if (a < 0 || b < 0 || a > std::numeric_limits<int>::max()) parse_error("bad header");
      n = static_cast<int>(a);
      m = static_cast<int>(b);
      continue;
    }
    if (a < 1 || a > n || b < 1 || b > n) {
      parse_error("line " + std::to_string(lineno) + ": vertex id outside 1.." + std::to_string(n));
    }
    edges.push_back(one_based_edge(static_cast<int>(a), static_cast<int>(b), n, lineno));
  }
  if (n < 0) parse_error("missing header line `n m`");
  if (static_cast<int>(edges.size()) != m) {
    parse_error("header announces " + std::to_string(m) + " edges, found " +
                std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

Graph parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  int n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      if (n >= 0) parse_error("line " + std::to_string(lineno) + ": second problem line");
      if (!(ls >> kind >> n >> m) || n < 0 || m < 0) {
        parse_error("line " + std::to_string(lineno) + ": expected `p edge n m`");
      }
    } else if (tag == "e") {
      int u, v;
      if (n < 0) parse_error("line " + std::to_string(lineno) + ": edge before problem line");
      if (!(ls >> u >> v)) parse_error("line " + std::to_string(lineno) + ": expected `e u v`");
      edges.push_back(one_based_edge(u, v, n, lineno));
    } else {
      parse_error("line " + std::to_string(lineno) + ": unknown line type `" + tag + "`");
    }
  }
  if (n < 0) parse_error("missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    parse_error("problem line announces " + std::to_string(m) + " edges, found " +
                std::to_string(edges.size()));
  }
  return Graph::from_edges(n, edges);
}

Graph parse_graph_json(std::string_view text) {
  const Json j = parse_json(text);
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) parse_error("negative n");
  const Json& list = field(j, "edges");
  if (!list.is_array()) parse_error("\"edges\" must be an array");
  std::vector<Edge> edges;
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 2) parse_error("edge must be a pair");
    edges.push_back(one_based_edge(as_int(e[0], "vertex"), as_int(e[1], "vertex"), n, 0));
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::Auto) {
    const auto start = text.find_first_not_of(" \t\r\n");
    if (start != std::string_view::npos && text[start] == '{') {
      format = GraphFormat::Json;
    } else {
      format = GraphFormat::EdgeList;
      std::istringstream in{std::string(text)};
      std::string line, tag;
      while (std::getline(in, line)) {
        std::istringstream ls(line);
        if ((ls >> tag) && tag == "p") {
          format = GraphFormat::Dimacs;
          break;
        }
      }
    }
  }
  switch (format) {
    case GraphFormat::Json: return parse_graph_json(text);
    case GraphFormat::Dimacs: return parse_dimacs(text);
    default: return parse_edge_list(text);
  }
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

std::string write_graph_json(const Graph& g) {
  Json j;
  j["n"] = g.num_vertices();
  j["edges"] = Json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u + 1, v + 1});
  return j.dump() + "\n";
}

TreeDecomposition parse_td_json(std::string_view text) {
  const Json j = parse_json(text);
  const Json& nodes = field(j, "nodes");
  if (!nodes.is_array()) parse_error("\"nodes\" must be an array");
  const auto count = static_cast<int>(nodes.size());
  std::vector<std::vector<VertexId>> clusters(static_cast<std::size_t>(count));
  std::vector<char> seen(static_cast<std::size_t>(count), 0);
  int max_vertex = 0;
  for (const Json& node : nodes) {
    const int id = as_int(field(node, "id"), "node id");
    if (id < 1 || id > count) parse_error("node id " + std::to_string(id) + " outside 1.." + std::to_string(count));
    if (seen[id - 1]) parse_error("duplicate node id " + std::to_string(id));
    seen[id - 1] = 1;
    const Json& cluster = field(node, "cluster");
    if (!cluster.is_array()) parse_error("\"cluster\" must be an array");
    for (const Json& v : cluster) {
      const int x = as_int(v, "cluster vertex");
      if (x < 1) parse_error("cluster vertex " + std::to_string(x) + " is not positive");
      max_vertex = std::max(max_vertex, x);
      clusters[id - 1].push_back(x - 1);
    }
  }
  int graph_n = max_vertex;
  if (j.contains("n")) {
    graph_n = as_int(j.at("n"), "n");
    if (graph_n < max_vertex) parse_error("cluster vertex exceeds n");
  }
  const Json& list = field(j, "edges");
  if (!list.is_array()) parse_error("\"edges\" must be an array");
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const Json& e : list) {
    if (!e.is_array() || e.size() != 2) parse_error("tree edge must be a pair");
    const int a = as_int(e[0], "node id"), b = as_int(e[1], "node id");
    if (a < 1 || a > count || b < 1 || b > count) parse_error("tree edge endpoint outside 1.." + std::to_string(count));
    edges.emplace_back(a - 1, b - 1);
  }
  return TreeDecomposition::from_edges(graph_n, std::move(clusters), edges);
}

std::string write_td_json(const TreeDecomposition& td) {
  Json j;
  j["n"] = td.graph_n;
  j["nodes"] = Json::array();
  for (NodeId i = 0; i < td.num_nodes(); ++i) {
    Json cluster = Json::array();
    for (VertexId v : td.clusters[i]) cluster.push_back(v + 1);
    j["nodes"].push_back({{"id", i + 1}, {"cluster", std::move(cluster)}});
  }
  j["edges"] = Json::array();
  for (const auto& [a, b] : td.tree_edges()) j["edges"].push_back({a + 1, b + 1});
  return j.dump() + "\n";
}

std::string cut_report_json(const CutReport& report) {
  Json j;
  j["width"] = report.width;
  j["bound"] = static_cast<double>(report.bound);
  j["legible_bound"] = static_cast<double>(report.legible_bound);
  j["n"] = report.n;
  j["m"] = report.m;
  j["t"] = report.t;
  j["delta"] = report.delta;
  j["r"] = report.r.str();
  j["ops"] = report.ops;
  j["seconds"] = report.seconds;
  j["steps"] = Json::array();
  for (const StepTrace& s : report.steps) {
    j["steps"].push_back({{"case", to_string(s.kind)},
                          {"b_added", s.b_added},
                          {"z_size", s.z_size},
                          {"w_star", s.w_star.str()}});
  }
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_error("cannot write " + path);
  out << text;
}

}  // namespace treecut
