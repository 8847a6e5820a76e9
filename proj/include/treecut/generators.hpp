#ifndef TREECUT_GENERATORS_HPP
#define TREECUT_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>

#include "treecut/graph.hpp"
#include "treecut/tree_decomposition.hpp"

namespace treecut {

enum class Family { Path, Star, Spider, Caterpillar, Ternary, RandomTree, Grid, PartialKTree };

const char* to_string(Family f);
/// Accepts the names printed by to_string; throws ParseError otherwise.
Family parse_family(const std::string& name);

/// Parameters used by each family:
///   path n; star n (center 0); spider legs x length (center 0);
///   caterpillar n spine vertices with k leaves each; ternary height h;
///   random-tree n, seed (uniform labeled tree); grid k x k;
///   partial-ktree n, k, seed (random subgraph of a random k-tree).
struct InstanceSpec {
  Family family = Family::Path;
  int n = 1;
  int k = 1;
  int h = 0;
  int legs = 3;
  int length = 1;
  std::uint64_t seed = 0;

  /// Short name such as "ternary-h3" or "random-tree-n16-s7".
  std::string id() const;
};

struct Instance {
  InstanceSpec spec;
  Graph g;
  TreeDecomposition td;
};

/// Deterministic given the spec. Trees come with tree_to_width1_td, grids with
/// the row-major window path decomposition of width k, partial k-trees with
/// the decomposition they were built along. Throws BadSize for parameters out
/// of range and InternalInvariant if the output fails validate().
Instance generate(const InstanceSpec& spec);

/// Uniform draw from [0, bound) that depends only on the mt19937_64 stream, so
/// generated instances agree across standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound);

}  // namespace treecut

#endif  // TREECUT_GENERATORS_HPP
