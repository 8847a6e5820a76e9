#include <cmath>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "treecut/approx_cut.hpp"
#include "treecut/bench.hpp"
#include "treecut/bisect.hpp"
#include "treecut/generators.hpp"
#include "treecut/io.hpp"
#include "treecut/oracle.hpp"

using namespace treecut;

namespace {

constexpr int kExitViolation = 2;

void print_set(const char* name, const std::vector<VertexId>& vs) {
  std::cout << name << ":";
  for (VertexId v : vs) std::cout << ' ' << v + 1;
  std::cout << '\n';
}

int run_cut(const std::string& graph_path, const std::string& td_path, std::optional<int> m,
            const std::string& impl_name, const std::string& report, bool checked) {
  const Graph g = parse_graph(read_file(graph_path));
  const TreeDecomposition td = parse_td_json(read_file(td_path));
  const ValidityReport vr = validate(g, td);
  if (!vr.ok()) throw Error(ErrorCode::InvalidDecomposition, vr.describe());
  const Impl impl = impl_name == "first" ? Impl::First : Impl::Linear;
  const CutResult res =
      exact_size_cut(g, td, m.value_or(g.num_vertices() / 2), impl, DriverOptions{checked});
  const CutReport& rep = res.report;
  if (report == "json") {
    std::cout << cut_report_json(rep);
  } else {
    std::cout << "n " << rep.n << "  m " << rep.m << "  t " << rep.t << "  delta " << rep.delta
              << "  r " << rep.r << '\n'
              << "width " << rep.width << "  bound " << static_cast<double>(rep.bound)
              << "  legible bound " << static_cast<double>(rep.legible_bound) << '\n';
    for (const StepTrace& s : rep.steps) {
      std::cout << "step case " << to_string(s.kind) << "  b_added " << s.b_added << "  z_size "
                << s.z_size << "  w* " << s.w_star << '\n';
    }
    print_set("B", res.b);
  }
  const bool ok = within_bound(rep.width, rep.t, rep.delta, rep.r) &&
                  within_legible_bound(rep.width, rep.t, rep.delta, rep.r);
  if (!ok) std::cerr << "bound exceeded\n";
  return ok ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounded balanced cuts and bisections from tree decompositions"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance and its tree decomposition");
  std::string family = "path", gen_graph, gen_td;
  InstanceSpec spec;
  gen->add_option("--family", family,
                  "path|star|spider|caterpillar|ternary|random-tree|grid|partial-ktree")
      ->required();
  gen->add_option("--n", spec.n, "Vertex count (spine length for caterpillar)");
  gen->add_option("--k", spec.k, "Grid side, caterpillar leaves, or partial k-tree width");
  gen->add_option("--height", spec.h, "Ternary tree height");
  gen->add_option("--legs", spec.legs, "Spider legs");
  gen->add_option("--length", spec.length, "Spider leg length");
  gen->add_option("--seed", spec.seed, "Random seed");
  gen->add_option("--graph", gen_graph, "Output edge list (stdout if omitted)");
  gen->add_option("--td", gen_td, "Output decomposition JSON");

  // validate
  auto* val = app.add_subcommand("validate", "Check a tree decomposition against a graph");
  std::string val_graph, val_td;
  val->add_option("--graph", val_graph)->required();
  val->add_option("--td", val_td)->required();

  // bisect / cut
  std::string cut_graph, cut_td, impl = "linear", report = "text";
  std::optional<int> cut_m;
  bool checked = false;
  auto add_cut_options = [&](CLI::App* sub) {
    sub->add_option("--graph", cut_graph)->required();
    sub->add_option("--td", cut_td)->required();
    sub->add_option("--impl", impl)->check(CLI::IsMember({"first", "linear"}));
    sub->add_option("--report", report)->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--checked", checked, "Check every step and revalidate every G[Z]");
  };
  auto* bis = app.add_subcommand("bisect", "Bisection within the tree-decomposition bound");
  add_cut_options(bis);
  bis->add_option("--m", cut_m, "Size of B (default floor(n/2))");
  auto* cut = app.add_subcommand("cut", "Cut with exactly m vertices on the B side");
  add_cut_options(cut);
  cut->add_option("--m", cut_m)->required();

  // approx-cut
  auto* apx = app.add_subcommand("approx-cut", "Set B with cm < |B| <= m");
  std::string apx_td, apx_graph, apx_c;
  std::int64_t apx_m = 0;
  apx->add_option("--td", apx_td)->required();
  apx->add_option("--m", apx_m)->required();
  apx->add_option("--c", apx_c, "Fraction in (0,1), e.g. 3/4 or 0.75")->required();
  apx->add_option("--graph", apx_graph, "Graph, for the width and bound");

  // oracle
  auto* orc = app.add_subcommand("oracle", "Exact minimum cut for small graphs or trees");
  std::string orc_graph, method = "brute";
  std::optional<int> orc_m;
  orc->add_option("--graph", orc_graph)->required();
  orc->add_option("--m", orc_m, "Size of B (default floor(n/2))");
  orc->add_option("--method", method)->check(CLI::IsMember({"brute", "tree-dp"}));

  // bench
  auto* ben = app.add_subcommand("bench", "Width against bounds across instance families");
  BenchOptions bopt;
  std::string format = "csv", out;
  ben->add_flag("--differential", bopt.differential, "Also run the first implementation");
  ben->add_flag("--checked", bopt.checked);
  ben->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
  ben->add_option("--out", out, "Output file (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      spec.family = parse_family(family);
      const Instance inst = generate(spec);
      if (gen_graph.empty()) {
        std::cout << write_edge_list(inst.g);
      } else {
        write_file(gen_graph, write_edge_list(inst.g));
      }
      if (!gen_td.empty()) write_file(gen_td, write_td_json(inst.td));
      return 0;
    }
    if (*val) {
      const Graph g = parse_graph(read_file(val_graph));
      const TreeDecomposition td = parse_td_json(read_file(val_td));
      const ValidityReport vr = validate(g, td);
      std::cout << vr.describe() << '\n';
      if (vr.ok()) std::cout << "width " << width(td) << "  size " << size(td) << '\n';
      return vr.ok() ? 0 : kExitViolation;
    }
    if (*bis || *cut) return run_cut(cut_graph, cut_td, cut_m, impl, report, checked);
    if (*apx) {
      const TreeDecomposition td = parse_td_json(read_file(apx_td));
      const Fraction c = parse_fraction(apx_c);
      const ApproxCutResult res = approximate_cut(td, apx_m, c);
      const int s_bound = approx_iteration_bound(c);
      std::cout << "|B| " << res.b.size() << "  s* " << res.iterations << '\n';
      bool ok = res.iterations <= s_bound &&
                static_cast<__int128>(res.b.size()) * c.den > static_cast<__int128>(c.num) * apx_m;
      if (!apx_graph.empty()) {
        const Graph g = parse_graph(read_file(apx_graph));
        const std::int64_t bound =
            static_cast<std::int64_t>(s_bound) * (width(td) + 1) * max_degree(g);
        const int w = cut_width(g, res.b);
        std::cout << "width " << w << "  bound " << bound << '\n';
        ok = ok && w <= bound;
      }
      print_set("B", res.b);
      return ok ? 0 : kExitViolation;
    }
    if (*orc) {
      const Graph g = parse_graph(read_file(orc_graph));
      const int m = orc_m.value_or(g.num_vertices() / 2);
      OracleResult res;
      if (method == "tree-dp") {
        if (m != g.num_vertices() / 2) {
          throw Error(ErrorCode::BadSize, "tree-dp only computes bisections");
        }
        res = tree_dp_min_bisection(g);
      } else {
        res = brute_force_min_cut_size_m(g, m);
      }
      std::cout << "width " << res.width << "  searched " << res.search_space << '\n';
      print_set("B", res.witness);
      return 0;
    }
    if (*ben) {
      const auto rows = bench(default_bench_specs(), bopt);
      const std::string text = format == "json" ? bench_json(rows) : bench_csv(rows);
      if (out.empty()) {
        std::cout << text;
      } else {
        write_file(out, text);
      }
      for (const BenchRow& r : rows) {
        if (!r.ok()) return kExitViolation;
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.code() == ErrorCode::InternalInvariant ? kExitViolation : 1;
  }
  return 0;
}
