#ifndef TREECUT_BISECT_HPP
#define TREECUT_BISECT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "treecut/core.hpp"
#include "treecut/graph.hpp"
#include "treecut/labeling.hpp"
#include "treecut/tree_decomposition.hpp"

namespace treecut {

enum class StepCase { Case1, Case2a, Case2b };
const char* to_string(StepCase c);

/// Per path node quantities of the second case, for a fixed m. Labels x_* and
/// y_* are the smallest and largest labels of S_i whose image under N_m^{-1}
/// (b side) or N_m (f side) lies in R; -1 when the node is not special.
struct SpecialNode {
  NodeId node = -1;
  int s_size = 0;
  int u_b = 0, h_b = 0, u_f = 0, h_f = 0;
  int x_b = -1, y_b = -1, x_f = -1, y_f = -1;
  NodeId node_b = -1, node_b_last = -1, node_f = -1, node_f_last = -1;

  bool b_special() const { return u_b > 0; }
  bool f_special() const { return u_f > 0; }
};

/// Undefined (but computed) when some x in R has N_m(x) in R.
std::vector<SpecialNode> analyze_special_nodes(const PLabeling& pl, int m,
                                               OpsCounter* ops = nullptr);

/// First label x with x and x + m both in R, or -1.
int find_case1_witness(const PLabeling& pl, int m, OpsCounter* ops = nullptr);

/// (B, W, Z) in the original vertex names of the labeling's source.
struct TriCut {
  std::vector<VertexId> b;
  std::vector<VertexId> w;
  std::vector<VertexId> z;
  StepCase kind = StepCase::Case1;
};

struct StepTrace {
  StepCase kind = StepCase::Case1;
  int n = 0;
  int m = 0;
  int b_added = 0;
  int z_size = 0;
  /// w*(P, X) before the step and w*(P', X') after it (0 after Case 1).
  Fraction w_star;
  Fraction w_star_after{0, 1};
  /// e_G(B, W, Z) inside the current graph; -1 unless computed by a checked run.
  int width = -1;
};

struct StepResult {
  TriCut cut;
  StepTrace trace;
  /// The node chosen in the second case, -1 in Case 1.
  NodeId node = -1;
};

/// One weight-doubling step on the current graph described by `pl`.
/// Case 1 returns |B| = m and Z empty. Otherwise |B| <= m <= |B| + |Z|,
/// 0 < |Z| <= n/2, and if `update` is set `pl` is rewritten in place to
/// describe G[Z] with the shortened path. Postconditions are always checked
/// (InternalInvariant). Throws BadSize unless 1 <= m <= n.
StepResult doubling_step(PLabeling& pl, int m, bool update, OpsCounter* ops = nullptr);

/// 1/2 t delta ((log2 1/r)^2 + 9 log2 1/r + 8).
long double bound_value(int t, int delta, const Fraction& r);
/// 8 t delta / r.
long double legible_bound_value(int t, int delta, const Fraction& r);
/// Exact comparisons against the two bounds; exact integer arithmetic when
/// 1/r is a power of two, where the bound is an integer.
bool within_bound(std::int64_t width, int t, int delta, const Fraction& r);
bool within_legible_bound(std::int64_t width, int t, int delta, const Fraction& r);
/// width <= t delta log2(16/r), the per-step bound of the second case.
bool within_step_bound(std::int64_t width, int t, int delta, const Fraction& r);

struct CutReport {
  int width = 0;
  int n = 0;
  int m = 0;
  int t = 0;
  int delta = 0;
  Fraction r;
  long double bound = 0;
  long double legible_bound = 0;
  std::vector<StepTrace> steps;
  std::uint64_t ops = 0;
  double seconds = 0;
};

struct CutResult {
  std::vector<VertexId> b;
  CutReport report;
};

enum class Impl { First, Linear };

struct DriverOptions {
  /// Validates the decomposition of every G[Z] and the per-step guarantees;
  /// costs extra time, so it is off for timing runs.
  bool checked = false;
};

/// Recomputes a nonredundant decomposition, heaviest path and labeling of
/// every G[Z] from scratch.
CutResult exact_size_cut(const Graph& g, const TreeDecomposition& td, int m,
                         const DriverOptions& opt = {});

/// Builds the labeling once and updates it in place after every step.
CutResult exact_size_cut_linear(const Graph& g, const TreeDecomposition& td, int m,
                                const DriverOptions& opt = {});

CutResult exact_size_cut(const Graph& g, const TreeDecomposition& td, int m, Impl impl,
                         const DriverOptions& opt = {});

/// |B| = floor(n/2).
CutResult minimum_bisection(const Graph& g, const TreeDecomposition& td, Impl impl = Impl::Linear,
                            const DriverOptions& opt = {});

}  // namespace treecut

#endif  // TREECUT_BISECT_HPP
