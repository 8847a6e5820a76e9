#include "treecut/bench.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "treecut/bisect.hpp"
#include "treecut/oracle.hpp"

namespace treecut {

bool BenchRow::ok() const {
  auto fine = [&](int w) {
    return w < 0 || (within_bound(w, t, delta, r) && within_legible_bound(w, t, delta, r) &&
                     w >= oracle_width);
  };
  return fine(width_linear) && fine(width_first);
}

BenchRow bench_instance(const Instance& inst, const BenchOptions& opt) {
  const Graph& g = inst.g;
  BenchRow row;
  row.id = inst.spec.id();
  row.n = g.num_vertices();
  row.td_size = size(inst.td);
  const bool forest = is_forest(g);
  if (forest) row.diam = relative_diameter(g);
  const DriverOptions dopt{opt.checked};
  const CutResult lin = minimum_bisection(g, inst.td, Impl::Linear, dopt);
  row.t = lin.report.t;
  row.delta = lin.report.delta;
  row.r = lin.report.r;
  row.width_linear = lin.report.width;
  row.bound = lin.report.bound;
  row.legible_bound = lin.report.legible_bound;
  row.ops = lin.report.ops;
  row.seconds = lin.report.seconds;
  row.steps = static_cast<int>(lin.report.steps.size());
  if (opt.differential) row.width_first = minimum_bisection(g, inst.td, Impl::First, dopt).report.width;
  if (row.n <= opt.oracle_max_n) {
    row.oracle_width = brute_force_min_bisection(g).width;
  } else if (forest && is_tree(g) && row.n <= opt.oracle_tree_max_n) {
    row.oracle_width = tree_dp_min_bisection(g).width;
  }
  return row;
}

std::vector<BenchRow> bench(const std::vector<InstanceSpec>& specs, const BenchOptions& opt) {
  std::vector<BenchRow> rows;
  rows.reserve(specs.size());
  for (const InstanceSpec& s : specs) rows.push_back(bench_instance(generate(s), opt));
  return rows;
}

std::vector<InstanceSpec> default_bench_specs() {
  std::vector<InstanceSpec> specs;
  for (int n : {10, 100, 1000}) specs.push_back({.family = Family::Path, .n = n});
  for (int n : {6, 17, 200}) specs.push_back({.family = Family::Star, .n = n});
  for (int len : {2, 8, 50}) specs.push_back({.family = Family::Spider, .legs = 3, .length = len});
  specs.push_back({.family = Family::Spider, .legs = 7, .length = 20});
  for (int n : {5, 40}) specs.push_back({.family = Family::Caterpillar, .n = n, .k = 2});
  for (int h = 2; h <= 6; ++h) specs.push_back({.family = Family::Ternary, .h = h});
  for (std::uint64_t s = 1; s <= 5; ++s) {
    specs.push_back({.family = Family::RandomTree, .n = 16, .seed = s});
    specs.push_back({.family = Family::RandomTree, .n = 1000, .seed = s});
  }
  for (int k : {2, 4, 10, 30}) specs.push_back({.family = Family::Grid, .k = k});
  for (std::uint64_t s = 1; s <= 3; ++s) {
    specs.push_back({.family = Family::PartialKTree, .n = 14, .k = 3, .seed = s});
    specs.push_back({.family = Family::PartialKTree, .n = 500, .k = 4, .seed = s});
  }
  return specs;
}

namespace {

std::string number(int v) { return v < 0 ? "" : std::to_string(v); }

std::string real(long double v) {
  std::ostringstream os;
  os << std::setprecision(10) << static_cast<double>(v);
  return os.str();
}

}  // namespace

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "id,n,t,delta,diam,r,width_linear,width_first,oracle_width,bound,legible_bound,ops,"
        "td_size,ops_ratio,seconds,steps,ok\n";
  for (const BenchRow& r : rows) {
    os << r.id << ',' << r.n << ',' << r.t << ',' << r.delta << ','
       << (r.diam ? r.diam->str() : "") << ',' << r.r.str() << ',' << r.width_linear << ','
       << number(r.width_first) << ',' << number(r.oracle_width) << ',' << real(r.bound) << ','
       << real(r.legible_bound) << ',' << r.ops << ',' << r.td_size << ',' << real(r.ops_ratio())
       << ',' << real(r.seconds) << ',' << r.steps << ',' << (r.ok() ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string bench_json(const std::vector<BenchRow>& rows) {
  using Json = nlohmann::ordered_json;
  auto opt_int = [](int v) { return v < 0 ? Json(nullptr) : Json(v); };
  Json out = Json::array();
  for (const BenchRow& r : rows) {
    out.push_back({{"id", r.id},
                   {"n", r.n},
                   {"t", r.t},
                   {"delta", r.delta},
                   {"diam", r.diam ? Json(r.diam->str()) : Json(nullptr)},
                   {"r", r.r.str()},
                   {"width_linear", r.width_linear},
                   {"width_first", opt_int(r.width_first)},
                   {"oracle_width", opt_int(r.oracle_width)},
                   {"bound", static_cast<double>(r.bound)},
                   {"legible_bound", static_cast<double>(r.legible_bound)},
                   {"ops", r.ops},
                   {"td_size", r.td_size},
                   {"ops_ratio", r.ops_ratio()},
                   {"seconds", r.seconds},
                   {"steps", r.steps},
                   {"ok", r.ok()}});
  }
  return out.dump(2) + "\n";
}

}  // namespace treecut
