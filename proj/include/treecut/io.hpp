#ifndef TREECUT_IO_HPP
#define TREECUT_IO_HPP

#include <string>
#include <string_view>

#include "treecut/bisect.hpp"
#include "treecut/graph.hpp"
#include "treecut/tree_decomposition.hpp"

namespace treecut {

enum class GraphFormat { Auto, EdgeList, Json, Dimacs };

/// Edge list: a line `n m`, then m lines `u v` with 1-based ids. Blank lines
/// and lines starting with '#' are skipped.
/// JSON: {"n": n, "edges": [[u, v], ...]}, 1-based.
/// DIMACS: `c` comment lines, one `p edge n m` line, then `e u v` lines.
/// Auto picks JSON for a leading '{', DIMACS when a `p` line appears, and the
/// edge list otherwise. Throws ParseError (InvalidGraph for bad edges).
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

std::string write_edge_list(const Graph& g);
std::string write_graph_json(const Graph& g);

/// {"n": graph_n, "nodes": [{"id": i, "cluster": [...]}], "edges": [[i, j]]},
/// node and vertex ids 1-based. Node ids must be exactly 1..N, in any order;
/// "n" defaults to the largest cluster vertex. Cluster order is preserved and
/// edges are written sorted, so write(parse(s)) == s for any s produced by
/// write_td_json.
TreeDecomposition parse_td_json(std::string_view text);
std::string write_td_json(const TreeDecomposition& td);

/// {width, bound, legible_bound, n, m, t, delta, r, ops, seconds,
///  steps: [{case, b_added, z_size, w_star}]}.
std::string cut_report_json(const CutReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace treecut

#endif  // TREECUT_IO_HPP
