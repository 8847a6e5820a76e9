#include "treecut/bisect.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>

#include "treecut/approx_cut.hpp"

namespace treecut {

const char* to_string(StepCase c) {
  switch (c) {
    case StepCase::Case1: return "1";
    case StepCase::Case2a: return "2a";
    case StepCase::Case2b: return "2b";
  }
  return "?";
}

namespace {

void invariant(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InternalInvariant, what);
}

std::vector<SpecialNode> analyze(const PLabeling& pl, const std::vector<Block>& blocks, int m,
                                 OpsCounter* ops) {
  const CircularIndex circ = pl.circle();
  auto in_r = [&](int label) { return pl.in_r[pl.vertex_at[label]] != 0; };
  auto owner = [&](int label) { return pl.path_node_of[pl.vertex_at[label]]; };
  std::vector<SpecialNode> out(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Block& blk = blocks[k];
    SpecialNode& sn = out[k];
    sn.node = blk.node;
    sn.s_size = blk.s_len;
    for (int l = blk.s_first; l < blk.s_first + blk.s_len; ++l) {
      if (in_r(circ.sub(l, m))) {
        ++sn.u_b;
        if (sn.x_b < 0) sn.x_b = l;
        sn.y_b = l;
      }
      if (in_r(circ.add(l, m))) {
        ++sn.u_f;
        if (sn.x_f < 0) sn.x_f = l;
        sn.y_f = l;
      }
    }
    tick(ops, 1 + static_cast<std::uint64_t>(blk.s_len));
    if (sn.u_b > 0) {
      const int first = circ.sub(sn.x_b, m);
      const int last = circ.sub(sn.y_b, m);
      sn.h_b = circ.span(first, last) - sn.u_b;
      sn.node_b = owner(first);
      sn.node_b_last = owner(last);
    }
    if (sn.u_f > 0) {
      const int first = circ.add(sn.x_f, m);
      const int last = circ.add(sn.y_f, m);
      sn.h_f = circ.span(first, last) - sn.u_f;
      sn.node_f = owner(first);
      sn.node_f_last = owner(last);
    }
  }
  return out;
}

// Decomposition of G[S_i] on the hanging tree of i, vertices renamed to
// label - s_first. Node 0 is i itself with an empty cluster.
TreeDecomposition s_block_td(const PLabeling& pl, const Block& blk, OpsCounter* ops) {
  const TreeDecomposition& td = *pl.source;
  TreeDecomposition out;
  out.graph_n = blk.s_len;
  out.clusters.emplace_back();
  out.adj.emplace_back();
  if (pl.trimmed[blk.node]) return out;
  struct Frame {
    NodeId node, parent, local;
  };
  std::vector<Frame> stack{{blk.node, -1, 0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    for (NodeId j : td.adj[f.node]) {
      tick(ops);
      if (j == f.parent || pl.blocked[j]) continue;
      const NodeId lj = out.num_nodes();
      out.clusters.emplace_back();
      for (VertexId v : td.clusters[j]) {
        if (pl.is_current(v) && !pl.in_r[v]) {
          const int l = pl.label_of[v] - blk.s_first;
          invariant(l >= 0 && l < blk.s_len, "hanging-tree vertex outside S_i");
          out.clusters.back().push_back(l);
        }
      }
      tick(ops, td.clusters[j].size());
      out.adj.emplace_back();
      out.adj[f.local].push_back(lj);
      out.adj[lj].push_back(f.local);
      stack.push_back({j, f.node, lj});
    }
  }
  return out;
}

}  // namespace

std::vector<SpecialNode> analyze_special_nodes(const PLabeling& pl, int m, OpsCounter* ops) {
  return analyze(pl, block_layout(pl, ops), m, ops);
}

int find_case1_witness(const PLabeling& pl, int m, OpsCounter* ops) {
  const CircularIndex circ = pl.circle();
  for (int x = 0; x < pl.n; ++x) {
    if (pl.in_r[pl.vertex_at[x]] && pl.in_r[pl.vertex_at[circ.add(x, m)]]) {
      tick(ops, static_cast<std::uint64_t>(x) + 1);
      return x;
    }
  }
  tick(ops, static_cast<std::uint64_t>(pl.n));
  return -1;
}

StepResult doubling_step(PLabeling& pl, int m, bool update, OpsCounter* ops) {
  const int n = pl.n;
  if (m < 1 || m > n) {
    throw Error(ErrorCode::BadSize,
                "m = " + std::to_string(m) + " is not in [1," + std::to_string(n) + "]");
  }
  const CircularIndex circ = pl.circle();
  StepResult res;
  StepTrace& tr = res.trace;
  tr.n = n;
  tr.m = m;
  int r_count = 0;
  for (int l = 0; l < n; ++l) r_count += pl.in_r[pl.vertex_at[l]];
  tick(ops, static_cast<std::uint64_t>(n));
  tr.w_star = Fraction(r_count, n);

  // Role of every label: 0 = W, 1 = B, 2 = Z.
  std::vector<char> role(static_cast<std::size_t>(n), 0);
  int b_count = 0;
  int z_first = 0, z_len = 0;

  auto collect = [&] {
    for (int l = 0; l < n; ++l) {
      const VertexId v = pl.vertex_at[l];
      (role[l] == 1 ? res.cut.b : role[l] == 2 ? res.cut.z : res.cut.w).push_back(v);
    }
    tick(ops, static_cast<std::uint64_t>(n));
  };

  const int x = find_case1_witness(pl, m, ops);
  if (x >= 0) {
    tr.kind = StepCase::Case1;
    for (int k = 1; k <= m; ++k) role[circ.add(x, k)] = 1;
    b_count = m;
    collect();
  } else {
    invariant(2 * r_count <= n, "second case with |R| > n/2");
    const auto blocks = block_layout(pl, ops);
    const auto special = analyze(pl, blocks, m, ops);
    // Pick the first node, in path order, with |S_i| + |H_i| <= (1/r - 1)|U_i|;
    // the backward side wins at the same node.
    std::size_t k = 0;
    bool backward = false;
    for (; k < special.size(); ++k) {
      const SpecialNode& sn = special[k];
      auto qualifies = [&](int u, int h) {
        return u > 0 && static_cast<std::int64_t>(sn.s_size + h) * r_count <=
                            static_cast<std::int64_t>(n - r_count) * u;
      };
      if (qualifies(sn.u_b, sn.h_b)) {
        backward = true;
        break;
      }
      if (qualifies(sn.u_f, sn.h_f)) break;
    }
    invariant(k < special.size(), "no qualifying special node");
    const SpecialNode& sn = special[k];
    const Block& blk = blocks[k];
    res.node = blk.node;
    tick(ops, special.size());

    int b1_first, b1_len, u_count;
    NodeId trim;
    if (backward) {
      tr.kind = StepCase::Case2a;
      const Block& prev = blocks[(k + blocks.size() - 1) % blocks.size()];
      const int v = circ.sub(sn.y_b, m);
      const int w = prev.r_first + prev.r_len - 1;
      b1_first = circ.add(v, 1);
      b1_len = circ.sub(w, v);
      z_first = circ.sub(sn.x_b, m);
      z_len = sn.u_b + sn.h_b;
      u_count = sn.u_b;
      trim = sn.node_b;
    } else {
      tr.kind = StepCase::Case2b;
      const int w = blk.r_first;
      const int v = circ.add(sn.x_f, m);
      b1_first = w;
      b1_len = circ.sub(v, w);
      z_first = v;
      z_len = sn.u_f + sn.h_f;
      u_count = sn.u_f;
      trim = sn.node_f;
    }
    const int m_tilde = m - b1_len;
    invariant(m_tilde >= 1 && m_tilde <= blk.s_len, "residual size outside [1, |S_i|]");

    invariant(z_len > 0 && 2 * z_len <= n, "|Z| not in (0, n/2]");
    for (int k2 = 0; k2 < z_len; ++k2) {
      const int l = circ.add(z_first, k2);
      invariant(l < blk.s_first || l >= blk.s_first + blk.s_len, "Z meets S_i");
      role[l] = 2;
    }
    for (int k2 = 0; k2 < b1_len; ++k2) {
      const int l = circ.add(b1_first, k2);
      invariant(role[l] == 0, "B_1 meets Z");
      role[l] = 1;
    }
    b_count = b1_len;
    tick(ops, static_cast<std::uint64_t>(z_len + b1_len));

    const Fraction c(n - 2 * r_count, n - r_count);
    if (c.num > 0) {
      const TreeDecomposition local = s_block_td(pl, blk, ops);
      const ApproxCutResult b2 = approximate_cut(local, m_tilde, c, ops);
      for (VertexId id : b2.b) {
        invariant(role[blk.s_first + id] == 0, "B_2 meets B_1 or Z");
        role[blk.s_first + id] = 1;
      }
      b_count += static_cast<int>(b2.b.size());
      tick(ops, b2.b.size());
    }
    invariant(b_count <= m && m <= b_count + z_len, "|B| <= m <= |B| + |Z| violated");
    invariant(static_cast<std::int64_t>(u_count) * n >= 2LL * r_count * z_len,
              "relative weight did not double");
    tr.w_star_after = Fraction(u_count, z_len);
    collect();

    if (update) {
      // Relabel Z in increasing old label order; keep the path nodes whose
      // R_j moved into Z and cut the hanging tree of the first Z node.
      std::vector<VertexId> next(static_cast<std::size_t>(z_len));
      const int head = z_first + z_len > n ? z_first + z_len - n : 0;
      for (int k2 = 0; k2 < z_len; ++k2) {
        const int old_label = k2 < head ? k2 : z_first + (k2 - head);
        next[k2] = pl.vertex_at[old_label];
      }
      std::vector<NodeId> path;
      for (const Block& b : blocks) {
        if (circ.sub(b.r_first, z_first) < z_len) path.push_back(b.node);
      }
      for (int k2 = 0; k2 < z_len; ++k2) pl.label_of[next[k2]] = k2;
      pl.vertex_at = std::move(next);
      pl.path = std::move(path);
      pl.trimmed[trim] = 1;
      pl.n = z_len;
      tick(ops, static_cast<std::uint64_t>(2 * z_len) + blocks.size());
    }
  }

  res.cut.kind = tr.kind;
  tr.b_added = b_count;
  tr.z_size = z_len;
  return res;
}

}  // namespace treecut

namespace treecut {

namespace {

void check_bound_args(int t, int delta, const Fraction& r) {
  if (t < 1 || delta < 0) throw Error(ErrorCode::BadSize, "need t >= 1 and delta >= 0");
  if (r.num <= 0 || r.num > r.den) throw Error(ErrorCode::BadFraction, "r must lie in (0,1]");
}

// k with r = 1/2^k, if any.
std::optional<int> exact_log2_inverse(const Fraction& r) {
  if (r.num == 1 && std::has_single_bit(static_cast<std::uint64_t>(r.den))) {
    return std::countr_zero(static_cast<std::uint64_t>(r.den));
  }
  return std::nullopt;
}

long double log2_inverse(const Fraction& r) {
  return std::log2(static_cast<long double>(r.den)) - std::log2(static_cast<long double>(r.num));
}

}  // namespace

long double bound_value(int t, int delta, const Fraction& r) {
  check_bound_args(t, delta, r);
  const long double td = static_cast<long double>(t) * delta;
  if (auto k = exact_log2_inverse(r)) {
    return td * static_cast<long double>((*k + 1) * (*k + 8)) / 2;
  }
  const long double l = log2_inverse(r);
  return td * (l * l + 9 * l + 8) / 2;
}

long double legible_bound_value(int t, int delta, const Fraction& r) {
  check_bound_args(t, delta, r);
  return 8.0L * t * delta * static_cast<long double>(r.den) / static_cast<long double>(r.num);
}

bool within_bound(std::int64_t width, int t, int delta, const Fraction& r) {
  check_bound_args(t, delta, r);
  if (auto k = exact_log2_inverse(r)) {
    // (k + 1)(k + 8) is always even, so the bound is an integer.
    return static_cast<__int128>(width) * 2 <=
           static_cast<__int128>(t) * delta * (*k + 1) * (*k + 8);
  }
  // log2 of a rational that is not a power of two is irrational, so the
  // bound is never an integer and the comparison cannot be a tie.
  return static_cast<long double>(width) <= bound_value(t, delta, r);
}

bool within_legible_bound(std::int64_t width, int t, int delta, const Fraction& r) {
  check_bound_args(t, delta, r);
  return static_cast<__int128>(width) * r.num <= static_cast<__int128>(8) * t * delta * r.den;
}

bool within_step_bound(std::int64_t width, int t, int delta, const Fraction& r) {
  check_bound_args(t, delta, r);
  if (auto k = exact_log2_inverse(r)) {
    return static_cast<__int128>(width) <= static_cast<__int128>(t) * delta * (4 + *k);
  }
  return static_cast<long double>(width) <=
         static_cast<long double>(t) * delta * (4 + log2_inverse(r));
}

namespace {

using Clock = std::chrono::steady_clock;

struct DriverState {
  const Graph& g;
  CutResult res;
  std::vector<char> in_b;
  Clock::time_point start = Clock::now();
  OpsCounter ops;

  DriverState(const Graph& graph, const TreeDecomposition& td, int m) : g(graph) {
    const int n = g.num_vertices();
    if (td.graph_n != n) {
      throw Error(ErrorCode::InvalidDecomposition, "decomposition and graph sizes differ");
    }
    if (n == 0) throw Error(ErrorCode::BadSize, "empty graph");
    if (m < 0 || m > n) {
      throw Error(ErrorCode::BadSize,
                  "m = " + std::to_string(m) + " is not in [0," + std::to_string(n) + "]");
    }
    res.report.n = n;
    res.report.m = m;
    res.report.delta = max_degree(g);
    in_b.assign(static_cast<std::size_t>(n), 0);
  }

  void set_decomposition(const TreeDecomposition& td0, const Fraction& r0) {
    res.report.t = std::max(width(td0) + 1, 1);
    res.report.r = r0;
  }

  void add_b(std::span<const VertexId> b) {
    for (VertexId v : b) {
      invariant(!in_b[v], "vertex added to B twice");
      in_b[v] = 1;
      res.b.push_back(v);
    }
  }

  // Per-step guarantees, checked only in checked runs.
  void check_step(StepTrace& tr, const TriCut& cut) {
    const CutReport& rep = res.report;
    tr.width = tri_cut_width(g, cut.b, cut.w, cut.z);
    if (tr.kind == StepCase::Case1) {
      invariant(cut.z.empty() && tr.b_added == tr.m, "first option sizes violated");
      invariant(tr.width <= 2 * rep.t * rep.delta, "first option width above 2 t delta");
    } else {
      invariant(tr.b_added <= tr.m && tr.m <= tr.b_added + tr.z_size, "second option sizes");
      invariant(tr.z_size > 0 && 2 * tr.z_size <= tr.n, "second option |Z|");
      invariant(Fraction(2 * tr.w_star.num, tr.w_star.den) <= tr.w_star_after,
                "relative weight did not double");
      invariant(within_step_bound(tr.width, rep.t, rep.delta, tr.w_star),
                "second option width above t delta log2(16/r)");
    }
  }

  CutResult finish() {
    CutReport& rep = res.report;
    invariant(static_cast<int>(res.b.size()) == rep.m, "|B| differs from m");
    if (!rep.steps.empty()) {
      // At most log2(1/r0) + 1 steps.
      const auto s = rep.steps.size();
      invariant(s <= 62 && (static_cast<__int128>(1) << (s - 1)) * rep.r.num <= rep.r.den,
                "more steps than log2(1/r) + 1");
    }
    rep.width = cut_width(g, res.b);
    rep.bound = bound_value(rep.t, rep.delta, rep.r);
    rep.legible_bound = legible_bound_value(rep.t, rep.delta, rep.r);
    rep.ops = ops.touches;
    rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return std::move(res);
  }
};

}  // namespace

CutResult exact_size_cut(const Graph& g, const TreeDecomposition& td, int m,
                         const DriverOptions& opt) {
  DriverState st(g, td, m);
  TreeDecomposition cur = make_nonredundant(td, &st.ops);
  std::vector<VertexId> cur_to_orig(static_cast<std::size_t>(g.num_vertices()));
  std::iota(cur_to_orig.begin(), cur_to_orig.end(), 0);
  int remaining = m;
  bool first_round = true;
  while (true) {
    const HeaviestPath hp = heaviest_path(cur, &st.ops);
    if (first_round) {
      st.set_decomposition(cur, hp.weight.relative);
      first_round = false;
    }
    if (remaining == 0) break;
    PLabeling pl = build_plabeling(cur, hp.path, &st.ops);
    StepResult step = doubling_step(pl, remaining, false, &st.ops);
    for (auto* part : {&step.cut.b, &step.cut.w, &step.cut.z}) {
      for (VertexId& v : *part) v = cur_to_orig[v];
    }
    st.add_b(step.cut.b);
    remaining -= step.trace.b_added;
    if (opt.checked) st.check_step(step.trace, step.cut);
    st.res.report.steps.push_back(step.trace);
    if (step.trace.kind == StepCase::Case1 || remaining == 0) break;

    // Restrict the whole tree to G[Z] and contract it again.
    std::vector<VertexId> z_cur(step.cut.z.size());
    const auto orig_to_cur = [&] {
      std::vector<VertexId> map(static_cast<std::size_t>(g.num_vertices()), -1);
      for (std::size_t k = 0; k < cur_to_orig.size(); ++k) map[cur_to_orig[k]] = static_cast<int>(k);
      return map;
    }();
    for (std::size_t k = 0; k < z_cur.size(); ++k) z_cur[k] = orig_to_cur[step.cut.z[k]];
    const auto new_id = subset_renaming(cur.graph_n, z_cur);
    std::vector<NodeId> all(static_cast<std::size_t>(cur.num_nodes()));
    std::iota(all.begin(), all.end(), 0);
    TreeDecomposition restricted =
        restrict(cur, all, new_id, static_cast<int>(z_cur.size()), std::nullopt, &st.ops);
    if (opt.checked) {
      const ValidityReport vr = validate(g.induced(step.cut.z), restricted);
      invariant(vr.ok(), "restricted decomposition of G[Z] is invalid");
    }
    cur = make_nonredundant(restricted, &st.ops);
    cur_to_orig = step.cut.z;
  }
  return st.finish();
}

CutResult exact_size_cut_linear(const Graph& g, const TreeDecomposition& td, int m,
                                const DriverOptions& opt) {
  DriverState st(g, td, m);
  const TreeDecomposition td0 = make_nonredundant(td, &st.ops);
  const HeaviestPath hp = heaviest_path(td0, &st.ops);
  st.set_decomposition(td0, hp.weight.relative);
  if (m > 0) {
    PLabeling pl = build_plabeling(td0, hp.path, &st.ops);
    int remaining = m;
    while (true) {
      StepResult step = doubling_step(pl, remaining, true, &st.ops);
      st.add_b(step.cut.b);
      remaining -= step.trace.b_added;
      if (opt.checked) {
        st.check_step(step.trace, step.cut);
        if (step.trace.kind != StepCase::Case1) {
          const ValidityReport vr = validate(g.induced(pl.vertex_at), materialize(pl));
          invariant(vr.ok(), "updated decomposition of G[Z] is invalid");
          invariant(is_nonredundant_from_front(materialize(pl), TreePath{[&] {
                      std::vector<NodeId> p(pl.path.size());
                      std::iota(p.begin(), p.end(), 0);
                      return p;
                    }()}),
                    "updated path is redundant");
        }
      }
      st.res.report.steps.push_back(step.trace);
      if (step.trace.kind == StepCase::Case1 || remaining == 0) break;
    }
  }
  return st.finish();
}

CutResult exact_size_cut(const Graph& g, const TreeDecomposition& td, int m, Impl impl,
                         const DriverOptions& opt) {
  return impl == Impl::First ? exact_size_cut(g, td, m, opt) : exact_size_cut_linear(g, td, m, opt);
}

CutResult minimum_bisection(const Graph& g, const TreeDecomposition& td, Impl impl,
                            const DriverOptions& opt) {
  return exact_size_cut(g, td, g.num_vertices() / 2, impl, opt);
}

}  // namespace treecut
