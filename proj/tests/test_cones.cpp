#include "labcount/cones.hpp"

#include "labcount/errors.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>

using namespace labcount;

namespace {

VertexSubset all_of(const Multigraph& g) {
  VertexSubset s;
  for (int v = 0; v < g.n; ++v) s.push_back(v);
  return s;
}

std::vector<std::vector<Int>> ray_coords(const std::vector<Ray>& rays) {
  std::vector<std::vector<Int>> out;
  for (const auto& r : rays) out.push_back(r.coords);
  return out;
}

std::vector<Int> ints(std::initializer_list<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

// Independent oracle: integer points of the t-dilate checked directly against
// the system rows (equalities and implicit rows exact, the rest strict).
Int interior_brute(const Multigraph& g, const BlockSpec& blocks, long long t) {
  auto sys = build_system(g, blocks, Grading::maxlabel);
  auto facts = polytope_facts(sys);
  const int q = g.edge_count();
  std::vector<long long> z(static_cast<std::size_t>(q), 0);
  Int count = 0;
  auto row_value = [&](const RatRow& row) {
    Rat v = row[static_cast<std::size_t>(q)] * t;  // k column
    for (int e = 0; e < q; ++e) v += row[static_cast<std::size_t>(e)] * z[static_cast<std::size_t>(e)];
    return v;
  };
  auto is_implicit = [&](int i) {
    return std::find(facts.implicit_equalities.begin(), facts.implicit_equalities.end(), i) !=
           facts.implicit_equalities.end();
  };
  while (true) {
    bool ok = true;
    for (const auto& row : sys.equalities) ok = ok && row_value(row) == 0;
    for (int i = 0; ok && i < static_cast<int>(sys.inequalities.size()); ++i) {
      Rat v = row_value(sys.inequalities[static_cast<std::size_t>(i)]);
      ok = is_implicit(i) ? v == 0 : v > 0;
    }
    if (ok) ++count;
    int e = q - 1;
    while (e >= 0 && z[static_cast<std::size_t>(e)] == t) z[static_cast<std::size_t>(e--)] = 0;
    if (e < 0) break;
    ++z[static_cast<std::size_t>(e)];
  }
  return count;
}

}  // namespace

TEST_CASE("build_system shapes") {
  // K_3 index-graded magic cone forces equal labels: nullspace is the
  // all-ones line
  auto k3 = build_system(complete_graph(3), {all_of(complete_graph(3))}, Grading::index);
  CHECK(k3.variables == std::vector<std::string>{"z0", "z1", "z2"});
  CHECK(k3.equalities.size() == 2);
  auto basis = nullspace(k3.equalities, 3);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == basis[0][1]);
  CHECK(basis[0][1] == basis[0][2]);

  auto p3 = build_system(path_graph(3), {{0, 2}}, Grading::maxlabel);
  CHECK(p3.variables == std::vector<std::string>{"z0", "z1", "k"});
  REQUIRE(p3.equalities.size() == 1);
  CHECK(p3.equalities[0] == RatRow{Rat(1), Rat(-1), Rat(0)});
  CHECK(p3.inequalities.size() == 5);  // z >= 0 twice, k - z >= 0 twice, k >= 0

  auto bowtie = build_system(bowtie_graph(), {all_of(bowtie_graph())}, Grading::maxlabel);
  CHECK(bowtie.variables.size() == 7);
  CHECK(bowtie.equalities.size() == 4);

  CHECK_THROWS_AS(build_system(path_graph(3), {}, Grading::index), usage_error);
}

TEST_CASE("extreme_rays examples") {
  auto c4 = extreme_rays(build_system(cycle_graph(4), {all_of(cycle_graph(4))}, Grading::index));
  // edges 01, 12, 23, 03: alternating labelings
  CHECK(ray_coords(c4) == std::vector<std::vector<Int>>{ints({0, 1, 0, 1}), ints({1, 0, 1, 0})});
  for (const auto& r : c4) CHECK(r.index == Int(1));

  auto k3 = extreme_rays(build_system(complete_graph(3), {all_of(complete_graph(3))}, Grading::index));
  CHECK(ray_coords(k3) == std::vector<std::vector<Int>>{ints({1, 1, 1})});
  CHECK(k3[0].index == Int(2));

  auto bowtie =
      extreme_rays(build_system(bowtie_graph(), {all_of(bowtie_graph())}, Grading::maxlabel));
  CHECK(ray_coords(bowtie) ==
        std::vector<std::vector<Int>>{ints({0, 0, 0, 0, 0, 0, 1}), ints({1, 1, 1, 0, 0, 2, 2}),
                                      ints({2, 0, 0, 1, 1, 1, 2}), ints({3, 1, 1, 1, 1, 3, 3})});
  CHECK(bowtie[3].max_label == 3);

  // guardrail on wide systems
  Multigraph big = complete_graph(6);  // 15 labels + k
  CHECK_THROWS_AS(extreme_rays(build_system(big, {all_of(big)}, Grading::maxlabel)),
                  guardrail_error);
}

TEST_CASE("polytope_facts examples") {
  auto p3 = polytope_facts(build_system(path_graph(3), {{0, 2}}, Grading::maxlabel));
  CHECK(p3.dimension == 1);
  CHECK(p3.implicit_equalities.empty());
  CHECK(p3.vertices ==
        std::vector<std::vector<Rat>>{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}});
  CHECK(p3.denominator_lcm == 1);

  auto bowtie = polytope_facts(build_system(bowtie_graph(), {all_of(bowtie_graph())}, Grading::maxlabel));
  CHECK(bowtie.dimension == 2);
  CHECK(bowtie.denominator_lcm == 6);
  std::vector<Rat> v1{Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(0), Rat(0), Rat(1)};
  std::vector<Rat> v2{Rat(1), Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(1)};
  CHECK(std::find(bowtie.vertices.begin(), bowtie.vertices.end(), v1) != bowtie.vertices.end());
  CHECK(std::find(bowtie.vertices.begin(), bowtie.vertices.end(), v2) != bowtie.vertices.end());

  auto tp = polytope_facts(
      build_system(triangle_pendant_graph(), {all_of(triangle_pendant_graph())}, Grading::maxlabel));
  CHECK(tp.dimension == 1);
  CHECK(tp.implicit_equalities == std::vector<int>{1, 2});  // z_bc >= 0 and z_ca >= 0

  CHECK_THROWS_AS(polytope_facts(build_system(path_graph(3), {{0, 2}}, Grading::index)),
                  usage_error);
}

TEST_CASE("count_relative_interior") {
  for (long long t = 1; t <= 7; ++t) {
    CHECK(count_relative_interior(path_graph(3), {{0, 2}}, t) == t - 1);
    CHECK(count_relative_interior(triangle_pendant_graph(), {all_of(triangle_pendant_graph())},
                                  t) == t - 1);
  }
  // positive-label count differs on the implicit-equality instance
  CHECK(count_block_magic(triangle_pendant_graph(), {all_of(triangle_pendant_graph())}, 5,
                          Positivity::positive) == 0);

  // 0-dimensional section: the star K_{1,3} over all vertices pins every
  // label to zero, and that single point is its own relative interior
  Multigraph star;
  star.n = 4;
  star.edges = {{0, 1}, {0, 2}, {0, 3}};
  auto star_facts = polytope_facts(build_system(star, {all_of(star)}, Grading::maxlabel));
  CHECK(star_facts.dimension == 0);
  for (long long t = 1; t <= 4; ++t) {
    CHECK(count_relative_interior(star, {all_of(star)}, t) == 1);
    CHECK(count_relative_interior(star, {all_of(star)}, t) ==
          interior_brute(star, {all_of(star)}, t));
  }

  // dp-backed interior equals the direct system-row oracle
  for (const auto& g : connected_graphs(3))
    for (long long t = 1; t <= 4; ++t)
      CHECK(count_relative_interior(g, {all_of(g)}, t) == interior_brute(g, {all_of(g)}, t));
  auto tp = triangle_pendant_graph();
  for (long long t = 1; t <= 5; ++t) {
    CHECK(count_relative_interior(tp, {all_of(tp)}, t) == interior_brute(tp, {all_of(tp)}, t));
    CHECK(count_relative_interior(tp, {{0, 2}}, t) == interior_brute(tp, {{0, 2}}, t));
  }
}

TEST_CASE("verify_reciprocity") {
  auto p3 = verify_reciprocity(path_graph(3), {{0, 2}}, 6);
  CHECK(p3.fit_ok);
  CHECK(p3.dimension == 1);
  CHECK(p3.all_pass);
  CHECK(p3.positive_matches_everywhere);

  // unit segment: single edge, no blocks
  auto segment = verify_reciprocity(path_graph(2), {}, 6);
  CHECK(segment.fit_ok);
  CHECK(segment.dimension == 1);
  CHECK(segment.all_pass);
  for (const auto& e : segment.entries) {
    CHECK(e.interior == e.t - 1);
    CHECK(e.reciprocal == Rat(e.t - 1));
  }

  // triangle-with-pendant passes against interior counts but the
  // positive-label comparison is flagged unequal
  auto tp = verify_reciprocity(triangle_pendant_graph(), {all_of(triangle_pendant_graph())}, 6);
  CHECK(tp.fit_ok);
  CHECK(tp.all_pass);
  CHECK_FALSE(tp.positive_matches_everywhere);

  // the bowtie at |E| = 6 runs reciprocity through a period-6 fit
  auto bt = verify_reciprocity(bowtie_graph(), {all_of(bowtie_graph())}, 6);
  CHECK(bt.fit_ok);
  CHECK(bt.period == 6);
  CHECK(bt.all_pass);
  CHECK(bt.positive_matches_everywhere);
}

TEST_CASE("check_cf_bounds") {
  auto k3 = check_cf_bounds(complete_graph(3), {all_of(complete_graph(3))}, Grading::index);
  CHECK(k3.max_index == Int(2));
  REQUIRE(k3.index_witnesses.size() == 1);
  CHECK(k3.index_witnesses[0].coords == ints({1, 1, 1}));

  auto bowtie_index = check_cf_bounds(bowtie_graph(), {all_of(bowtie_graph())}, Grading::index);
  CHECK(bowtie_index.max_index == Int(2));
  CHECK(ray_coords(bowtie_index.index_witnesses) ==
        std::vector<std::vector<Int>>{ints({1, 1, 1, 0, 0, 2}), ints({2, 0, 0, 1, 1, 1})});

  // the maxlabel grading exceeds the label bound of 2 on the bowtie
  auto bowtie_max = check_cf_bounds(bowtie_graph(), {all_of(bowtie_graph())}, Grading::maxlabel);
  CHECK(bowtie_max.max_label == 3);
  REQUIRE(bowtie_max.label_witnesses.size() == 1);
  CHECK(bowtie_max.label_witnesses[0].coords == ints({3, 1, 1, 1, 1, 3, 3}));
}

TEST_CASE("check_spanning_condition") {
  CHECK_FALSE(check_spanning_condition(complete_graph(3)));  // the triangle itself
  CHECK(check_spanning_condition(cycle_graph(4)));
  CHECK(check_spanning_condition(path_graph(3)));  // vacuous: no spanning partition
  CHECK_FALSE(check_spanning_condition(cycle_graph(5)));
  CHECK(check_spanning_condition(cycle_graph(6)));

  // loops count as legal one-vertex components
  Multigraph loop_plus_edge;
  loop_plus_edge.n = 3;
  loop_plus_edge.edges = {{0, 0}, {1, 2}};
  CHECK(check_spanning_condition(loop_plus_edge));

  Multigraph big;
  big.n = 11;
  CHECK_THROWS_AS(check_spanning_condition(big), guardrail_error);
}

TEST_CASE("lemma 4 cross-check on small graphs") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& g : connected_graphs(n)) {
      auto rays = extreme_rays(build_system(g, {all_of(g)}, Grading::index));
      bool all_one = true;
      for (const auto& r : rays) {
        REQUIRE(r.index.has_value());
        CHECK(*r.index >= 1);
        CHECK(*r.index <= 2);
        all_one = all_one && *r.index == 1;
      }
      CHECK(check_spanning_condition(g) == all_one);
    }
  }
}

TEST_CASE("fitted degree equals polytope dimension; period divides vertex lcm") {
  for (const auto& g : connected_graphs(4)) {
    if (g.edge_count() > 5) continue;
    BlockSpec blocks{all_of(g)};
    auto facts = polytope_facts(build_system(g, blocks, Grading::maxlabel));
    long long lcm = facts.denominator_lcm.convert_to<long long>();
    std::vector<Int> seq;
    long long samples = std::max<long long>(12, lcm * (facts.dimension + 2) + 1);
    for (long long k = 0; k < samples; ++k)
      seq.push_back(count_block_magic(g, blocks, k, Positivity::nonneg));
    auto fit = detect_minimal(seq, static_cast<int>(lcm), facts.dimension + 1, 0);
    REQUIRE(fit.status == FitReport::Status::found);
    CHECK(fit.degree == facts.dimension);
    CHECK(lcm % fit.period == 0);
  }
}
