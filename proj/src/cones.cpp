#include "labcount/cones.hpp"

#include "labcount/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace labcount {

namespace {

// Sum-functional row of vertex v in label space (k column zero if present).
RatRow sum_row(const Multigraph& g, int v, int width) {
  RatRow row(static_cast<std::size_t>(width), Rat(0));
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edges[e];
    if (!g.directed) {
      if (a == v || b == v) row[static_cast<std::size_t>(e)] += 1;  // loops once
    } else {
      if (a == b) continue;
      if (a == v) row[static_cast<std::size_t>(e)] += 1;
      if (b == v) row[static_cast<std::size_t>(e)] -= 1;
    }
  }
  return row;
}

std::vector<Int> primitive_integer(const RatRow& v) {
  Int lcm = 1;
  for (const Rat& x : v) lcm = boost::multiprecision::lcm(lcm, rat_denom(x));
  std::vector<Int> out;
  Int gcd = 0;
  for (const Rat& x : v) {
    Int scaled = rat_numer(x) * (lcm / rat_denom(x));
    gcd = boost::multiprecision::gcd(gcd, scaled);
    out.push_back(std::move(scaled));
  }
  if (gcd > 1)
    for (Int& x : out) x /= gcd;
  return out;
}

RatRow to_rat_row(const std::vector<Int>& v) {
  RatRow out;
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

}  // namespace

ConstraintSystem build_system(const Multigraph& g, const BlockSpec& blocks, Grading grading) {
  validate_blocks(g, blocks);
  if (grading == Grading::index) {
    bool any = false;
    for (const auto& b : blocks) any = any || !b.empty();
    if (!any) throw usage_error("index grading requires at least one nonempty block");
  }

  const int q = g.edge_count();
  ConstraintSystem sys;
  sys.grading = grading;
  const int width = grading == Grading::maxlabel ? q + 1 : q;
  for (int e = 0; e < q; ++e) sys.variables.push_back("z" + std::to_string(e));
  if (grading == Grading::maxlabel) {
    sys.variables.push_back("k");
    sys.k_var = q;
  }

  for (int e = 0; e < q; ++e) {
    RatRow row(static_cast<std::size_t>(width), Rat(0));
    row[static_cast<std::size_t>(e)] = 1;
    sys.inequalities.push_back(std::move(row));  // z_e >= 0
  }
  if (grading == Grading::maxlabel) {
    for (int e = 0; e < q; ++e) {
      RatRow row(static_cast<std::size_t>(width), Rat(0));
      row[static_cast<std::size_t>(e)] = -1;
      row[static_cast<std::size_t>(q)] = 1;
      sys.inequalities.push_back(std::move(row));  // k - z_e >= 0
    }
    // k >= 0, redundant once any edge exists but needed for edgeless graphs
    RatRow row(static_cast<std::size_t>(width), Rat(0));
    row[static_cast<std::size_t>(q)] = 1;
    sys.inequalities.push_back(std::move(row));
  }

  for (const auto& block : blocks) {
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      RatRow a = sum_row(g, block[i], width);
      RatRow b = sum_row(g, block[i + 1], width);
      for (int j = 0; j < width; ++j)
        a[static_cast<std::size_t>(j)] -= b[static_cast<std::size_t>(j)];
      sys.equalities.push_back(std::move(a));
    }
  }

  for (const auto& block : blocks)
    if (!block.empty()) {
      sys.index_row = sum_row(g, block.front(), width);
      break;
    }
  return sys;
}

std::vector<Ray> extreme_rays(const ConstraintSystem& sys, bool force) {
  const int m = static_cast<int>(sys.variables.size());
  if (m > 12 && !force)
    throw guardrail_error("double description guardrail: " + std::to_string(m) +
                          " variables > 12 (use force to override)");

  auto basis = nullspace(sys.equalities.empty() ? RatMatrix{RatRow(static_cast<std::size_t>(m), Rat(0))}
                                                : sys.equalities,
                         m);
  const int s = static_cast<int>(basis.size());
  if (s == 0) return {};

  // Project inequalities into subspace coordinates; identically-zero rows are
  // satisfied everywhere and carry no facet information.
  RatMatrix proj;
  for (const auto& row : sys.inequalities) {
    RatRow p(static_cast<std::size_t>(s), Rat(0));
    bool zero = true;
    for (int j = 0; j < s; ++j) {
      p[static_cast<std::size_t>(j)] = dot(row, basis[static_cast<std::size_t>(j)]);
      if (p[static_cast<std::size_t>(j)] != 0) zero = false;
    }
    if (!zero) proj.push_back(std::move(p));
  }
  if (matrix_rank(proj) < s)
    throw usage_error("cone is not pointed; extreme rays are undefined");

  // Initial simplicial cone from s independent rows; its rays are the columns
  // of the inverse of that row matrix.
  std::vector<int> chosen;
  {
    RatMatrix acc;
    for (std::size_t i = 0; i < proj.size() && static_cast<int>(chosen.size()) < s; ++i) {
      acc.push_back(proj[i]);
      if (matrix_rank(acc) == static_cast<int>(chosen.size()) + 1)
        chosen.push_back(static_cast<int>(i));
      else
        acc.pop_back();
    }
  }
  RatMatrix bmat;
  for (int i : chosen) bmat.push_back(proj[static_cast<std::size_t>(i)]);

  std::vector<RatRow> rays;
  for (int j = 0; j < s; ++j) {
    RatRow e(static_cast<std::size_t>(s), Rat(0));
    e[static_cast<std::size_t>(j)] = 1;
    rays.push_back(solve_square(bmat, e));
  }

  std::vector<int> processed = chosen;
  auto tight_rows = [&](const RatRow& ray) {
    std::vector<int> t;
    for (int i : processed)
      if (dot(proj[static_cast<std::size_t>(i)], ray) == 0) t.push_back(i);
    return t;
  };

  for (int h = 0; h < static_cast<int>(proj.size()); ++h) {
    if (std::find(processed.begin(), processed.end(), h) != processed.end()) continue;
    const RatRow& hrow = proj[static_cast<std::size_t>(h)];
    std::vector<Rat> vals;
    for (const auto& r : rays) vals.push_back(dot(hrow, r));

    std::vector<std::size_t> pos, zero, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] == 0)
        zero.push_back(i);
      else
        neg.push_back(i);
    }
    if (neg.empty()) {
      processed.push_back(h);
      continue;
    }

    std::vector<RatRow> next;
    for (std::size_t i : pos) next.push_back(rays[i]);
    for (std::size_t i : zero) next.push_back(rays[i]);
    for (std::size_t p : pos)
      for (std::size_t n : neg) {
        // Adjacency: common tight rows must span a face of dimension s-2.
        auto tp = tight_rows(rays[p]);
        auto tn = tight_rows(rays[n]);
        RatMatrix common;
        for (int i : tp)
          if (std::find(tn.begin(), tn.end(), i) != tn.end())
            common.push_back(proj[static_cast<std::size_t>(i)]);
        if (matrix_rank(common) != s - 2) continue;
        RatRow w(static_cast<std::size_t>(s), Rat(0));
        for (int j = 0; j < s; ++j)
          w[static_cast<std::size_t>(j)] = vals[p] * rays[n][static_cast<std::size_t>(j)] -
                                           vals[n] * rays[p][static_cast<std::size_t>(j)];
        auto prim = primitive_integer(w);
        next.push_back(to_rat_row(prim));
      }
    rays = std::move(next);
    processed.push_back(h);
  }

  // Map back to the full space, normalize, sort, verify.
  std::vector<std::vector<Int>> xs;
  for (const auto& y : rays) {
    RatRow x(static_cast<std::size_t>(m), Rat(0));
    for (int j = 0; j < s; ++j)
      for (int i = 0; i < m; ++i)
        x[static_cast<std::size_t>(i)] +=
            y[static_cast<std::size_t>(j)] * basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    xs.push_back(primitive_integer(x));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Ray> out;
  for (auto& coords : xs) {
    RatRow x = to_rat_row(coords);
    for (const auto& row : sys.equalities)
      if (dot(row, x) != 0) throw std::logic_error("extreme ray violates an equality");
    RatMatrix tight = sys.equalities;
    for (const auto& row : sys.inequalities) {
      Rat v = dot(row, x);
      if (v < 0) throw std::logic_error("extreme ray violates an inequality");
      if (v == 0) tight.push_back(row);
    }
    if (matrix_rank(tight) != m - 1) throw std::logic_error("ray fails the extremality rank test");
    Int g = 0;
    for (const Int& c : coords) g = boost::multiprecision::gcd(g, c);
    if (g != 1) throw std::logic_error("ray generator is not primitive");

    Ray ray;
    ray.coords = std::move(coords);
    for (std::size_t i = 0; i < ray.coords.size(); ++i)
      if (static_cast<int>(i) != sys.k_var) ray.max_label = std::max(ray.max_label, ray.coords[i]);
    if (!sys.index_row.empty()) {
      Rat idx = dot(sys.index_row, x);
      if (rat_is_integer(idx)) ray.index = rat_numer(idx);
    }
    out.push_back(std::move(ray));
  }
  return out;
}

PolytopeFacts polytope_facts(const ConstraintSystem& sys, bool force) {
  if (sys.grading != Grading::maxlabel || sys.k_var < 0)
    throw usage_error("polytope_facts requires a maxlabel-graded system");
  const int m = static_cast<int>(sys.variables.size());
  const int q = m - 1;

  auto rays = extreme_rays(sys, force);
  PolytopeFacts facts;
  for (const auto& ray : rays) {
    const Int& k = ray.coords[static_cast<std::size_t>(sys.k_var)];
    if (k == 0) throw std::logic_error("maxlabel section is unbounded");
    std::vector<Rat> vertex;
    for (int e = 0; e < q; ++e) vertex.emplace_back(ray.coords[static_cast<std::size_t>(e)], k);
    facts.vertices.push_back(std::move(vertex));
  }
  std::sort(facts.vertices.begin(), facts.vertices.end());

  for (int i = 0; i < static_cast<int>(sys.inequalities.size()); ++i) {
    bool tight_everywhere = true;
    for (const auto& vertex : facts.vertices) {
      Rat v = sys.inequalities[static_cast<std::size_t>(i)][static_cast<std::size_t>(sys.k_var)];
      for (int e = 0; e < q; ++e)
        v += sys.inequalities[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] *
             vertex[static_cast<std::size_t>(e)];
      if (v != 0) {
        tight_everywhere = false;
        break;
      }
    }
    if (tight_everywhere) facts.implicit_equalities.push_back(i);
  }

  RatMatrix hull_rows;  // label-space parts of equalities and implicit equalities
  for (const auto& row : sys.equalities)
    hull_rows.emplace_back(row.begin(), row.begin() + q);
  for (int i : facts.implicit_equalities) {
    const auto& row = sys.inequalities[static_cast<std::size_t>(i)];
    hull_rows.emplace_back(row.begin(), row.begin() + q);
  }
  facts.dimension = q - matrix_rank(hull_rows);

  for (const auto& vertex : facts.vertices)
    for (const Rat& c : vertex)
      facts.denominator_lcm = boost::multiprecision::lcm(facts.denominator_lcm, rat_denom(c));
  return facts;
}

namespace {

Int interior_count(const Multigraph& g, const BlockSpec& blocks, long long t,
                   const PolytopeFacts& facts, bool force) {
  // Only z_e >= 0 rows can be implicit (the zero labeling is always a vertex,
  // where every k - z_e row evaluates to 1), so implicit equalities pin edges
  // to zero while every other label must be strictly inside [0, t].
  DpTask task;
  task.edge_ranges.assign(static_cast<std::size_t>(g.edge_count()), {1, t - 1});
  for (int idx : facts.implicit_equalities) {
    if (idx >= g.edge_count()) throw std::logic_error("unexpected implicit k - z_e row");
    task.edge_ranges[static_cast<std::size_t>(idx)] = {0, 0};
  }
  task.blocks = blocks;
  task.force = force;
  return count_dp(g, task);
}

}  // namespace

Int count_relative_interior(const Multigraph& g, const BlockSpec& blocks, long long t,
                            bool force) {
  if (t < 1) throw usage_error("dilation factor t must be >= 1");
  auto facts = polytope_facts(build_system(g, blocks, Grading::maxlabel), force);
  return interior_count(g, blocks, t, facts, force);
}

ReciprocityReport verify_reciprocity(const Multigraph& g, const BlockSpec& blocks,
                                     long long k_max, bool force) {
  if (k_max < 0) throw usage_error("k_max must be nonnegative");
  auto sys = build_system(g, blocks, Grading::maxlabel);
  auto facts = polytope_facts(sys, force);

  ReciprocityReport report;
  report.dimension = facts.dimension;

  long long period_bound = facts.denominator_lcm.convert_to<long long>();
  long long samples = std::max(k_max + 1, period_bound * (facts.dimension + 2) + 1);
  std::vector<Int> seq;
  for (long long k = 0; k < samples; ++k)
    seq.push_back(count_block_magic(g, blocks, k, Positivity::nonneg, Engine::dp, force));

  auto fit = detect_minimal(seq, static_cast<int>(period_bound), facts.dimension, 0);
  report.fit_ok = fit.status == FitReport::Status::found;
  if (!report.fit_ok) return report;
  report.period = fit.period;

  report.all_pass = true;
  report.positive_matches_everywhere = true;
  for (long long t = 1; t <= k_max + 1; ++t) {
    ReciprocityReport::Entry entry;
    entry.t = t;
    entry.interior = interior_count(g, blocks, t, facts, force);
    Rat value = fit.qp->evaluate(-t);
    entry.reciprocal = facts.dimension % 2 == 0 ? value : -value;
    entry.pass = rat_is_integer(entry.reciprocal) && rat_numer(entry.reciprocal) == entry.interior;
    entry.positive_count =
        count_block_magic(g, blocks, t - 1, Positivity::positive, Engine::dp, force);
    entry.interior_equals_positive = entry.positive_count == entry.interior;
    report.all_pass = report.all_pass && entry.pass;
    report.positive_matches_everywhere =
        report.positive_matches_everywhere && entry.interior_equals_positive;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

CfBoundsReport check_cf_bounds(const Multigraph& g, const BlockSpec& blocks, Grading grading,
                               bool force) {
  auto rays = extreme_rays(build_system(g, blocks, grading), force);
  CfBoundsReport report;
  report.ray_count = static_cast<int>(rays.size());
  for (const auto& ray : rays) {
    report.max_label = std::max(report.max_label, ray.max_label);
    if (ray.index && (!report.max_index || *ray.index > *report.max_index))
      report.max_index = ray.index;
  }
  for (const auto& ray : rays) {
    if (ray.max_label == report.max_label && report.max_label > 0)
      report.label_witnesses.push_back(ray);
    if (report.max_index && ray.index && *ray.index == *report.max_index)
      report.index_witnesses.push_back(ray);
  }
  return report;
}

namespace {

struct SpanningSearch {
  const Multigraph& g;
  std::vector<std::vector<bool>> adjacent;  // non-loop adjacency
  std::vector<bool> has_loop;
  std::vector<bool> assigned;
  bool found_odd_completion = false;

  explicit SpanningSearch(const Multigraph& graph)
      : g(graph),
        adjacent(static_cast<std::size_t>(graph.n),
                 std::vector<bool>(static_cast<std::size_t>(graph.n), false)),
        has_loop(static_cast<std::size_t>(graph.n), false),
        assigned(static_cast<std::size_t>(graph.n), false) {
    for (auto [u, v] : g.edges) {
      if (u == v)
        has_loop[static_cast<std::size_t>(u)] = true;
      else {
        adjacent[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
      }
    }
  }

  void cycles_from(int start, std::vector<int>& path, bool has_odd) {
    if (found_odd_completion) return;
    int last = path.back();
    for (int next = 0; next < g.n; ++next) {
      if (assigned[static_cast<std::size_t>(next)] || next == start) continue;
      if (!adjacent[static_cast<std::size_t>(last)][static_cast<std::size_t>(next)]) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      path.push_back(next);
      assigned[static_cast<std::size_t>(next)] = true;
      // Close the cycle (length >= 3, direction canonicalized by second < last).
      if (path.size() >= 3 && path[1] < path.back() &&
          adjacent[static_cast<std::size_t>(next)][static_cast<std::size_t>(start)])
        recurse(has_odd || path.size() % 2 == 1);
      cycles_from(start, path, has_odd);
      assigned[static_cast<std::size_t>(next)] = false;
      path.pop_back();
      if (found_odd_completion) return;
    }
  }

  void recurse(bool has_odd) {
    if (found_odd_completion) return;
    int v = 0;
    while (v < g.n && assigned[static_cast<std::size_t>(v)]) ++v;
    if (v == g.n) {
      if (has_odd) found_odd_completion = true;
      return;
    }
    assigned[static_cast<std::size_t>(v)] = true;
    if (has_loop[static_cast<std::size_t>(v)]) recurse(has_odd);  // loop component
    for (int u = v + 1; u < g.n && !found_odd_completion; ++u) {  // edge component
      if (assigned[static_cast<std::size_t>(u)] ||
          !adjacent[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
        continue;
      assigned[static_cast<std::size_t>(u)] = true;
      recurse(has_odd);
      assigned[static_cast<std::size_t>(u)] = false;
    }
    if (!found_odd_completion) {  // cycle component through v
      std::vector<int> path{v};
      cycles_from(v, path, has_odd);
    }
    assigned[static_cast<std::size_t>(v)] = false;
  }
};

}  // namespace

bool check_spanning_condition(const Multigraph& g, bool force) {
  if (g.n > 10 && !force)
    throw guardrail_error("spanning-condition search guardrail: |V| > 10 (use force)");
  SpanningSearch search(g);
  search.recurse(false);
  return !search.found_odd_completion;
}

}  // namespace labcount
