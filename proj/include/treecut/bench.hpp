#ifndef TREECUT_BENCH_HPP
#define TREECUT_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "treecut/core.hpp"
#include "treecut/generators.hpp"

namespace treecut {

/// One bisected instance. Unavailable numbers are -1 (printed empty in CSV,
/// null in JSON).
struct BenchRow {
  std::string id;
  int n = 0;
  int t = 0;
  int delta = 0;
  /// Relative diameter; only defined for forests.
  std::optional<Fraction> diam;
  Fraction r;
  int width_linear = 0;
  int width_first = -1;
  int oracle_width = -1;
  long double bound = 0;
  long double legible_bound = 0;
  std::uint64_t ops = 0;
  std::int64_t td_size = 0;
  double seconds = 0;
  int steps = 0;

  double ops_ratio() const { return td_size == 0 ? 0 : static_cast<double>(ops) / td_size; }
  /// Both impls (when run) within both bounds and above the oracle.
  bool ok() const;
};

struct BenchOptions {
  /// Also run the first implementation.
  bool differential = false;
  /// Oracle widths are computed by brute force up to this n, and for trees by
  /// the subtree table up to oracle_tree_max_n.
  int oracle_max_n = 16;
  int oracle_tree_max_n = 2000;
  /// Checked driver runs (per-step guarantees and revalidation).
  bool checked = false;
};

BenchRow bench_instance(const Instance& inst, const BenchOptions& opt = {});
std::vector<BenchRow> bench(const std::vector<InstanceSpec>& specs, const BenchOptions& opt = {});

/// A mixed sweep over every family.
std::vector<InstanceSpec> default_bench_specs();

/// Columns: id,n,t,delta,diam,r,width_linear,width_first,oracle_width,bound,
/// legible_bound,ops,td_size,ops_ratio,seconds,steps,ok.
std::string bench_csv(const std::vector<BenchRow>& rows);
std::string bench_json(const std::vector<BenchRow>& rows);

}  // namespace treecut

#endif  // TREECUT_BENCH_HPP
