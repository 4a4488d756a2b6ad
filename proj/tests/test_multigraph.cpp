#include "labcount/multigraph.hpp"

#include "labcount/errors.hpp"
#include "fixtures.hpp"

#include <doctest.h>

#include <set>

using namespace labcount;

TEST_CASE("parse_graph reads the documented format") {
  Multigraph k2 = parse_graph("graph undirected\nvertices 2\n0 1\n");
  CHECK(k2.n == 2);
  CHECK(k2.edges == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK_FALSE(k2.directed);

  Multigraph loop = parse_graph("graph undirected\nvertices 1\n0 0\n");
  CHECK(loop == loop_vertex_graph());

  Multigraph k12 = parse_graph("graph directed\nvertices 3\n1 0\n0 2\n");
  CHECK(k12 == oriented_k12_graph());

  Multigraph commented = parse_graph("# a comment\n\ngraph undirected\n# another\nvertices 2\n0 1\n");
  CHECK(commented == k2);
}

TEST_CASE("parse_graph errors name the offending line") {
  CHECK_THROWS_AS(parse_graph("graph sideways\nvertices 2\n"), input_error);
  CHECK_THROWS_AS(parse_graph("graph undirected\nvertices 2\n0 5\n"), input_error);
  CHECK_THROWS_AS(parse_graph("graph undirected\nvertices 2\n0 x\n"), input_error);
  CHECK_THROWS_AS(parse_graph("graph undirected\n"), input_error);

  try {
    parse_graph("graph undirected\nvertices 2\n# fine\n0 7\n");
    FAIL("expected input_error");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("serialize round trips") {
  for (const auto& g : {bowtie_graph(), triangle_pendant_graph(), loop_vertex_graph(),
                        double_edge_graph(), oriented_k12_graph()})
    CHECK(parse_graph(serialize_graph(g)) == g);

  // serialize . parse is identity up to comments and blank lines
  std::string noisy = "# header\ngraph undirected\n\nvertices 3\n0 1\n# mid\n1 2\n";
  CHECK(serialize_graph(parse_graph(noisy)) == "graph undirected\nvertices 3\n0 1\n1 2\n");
}

TEST_CASE("loopless_is_bipartite") {
  CHECK(loopless_is_bipartite(path_graph(3)));
  CHECK_FALSE(loopless_is_bipartite(complete_graph(3)));
  CHECK(loopless_is_bipartite(loop_vertex_graph()));
  CHECK(loopless_is_bipartite(cycle_graph(4)));
  CHECK_FALSE(loopless_is_bipartite(cycle_graph(5)));
  CHECK_THROWS_AS(loopless_is_bipartite(oriented_k12_graph()), usage_error);

  // invariant under adding loops
  for (auto g : connected_graphs(4)) {
    bool before = loopless_is_bipartite(g);
    g.edges.emplace_back(0, 0);
    g.edges.emplace_back(2, 2);
    CHECK(loopless_is_bipartite(g) == before);
  }
}

TEST_CASE("component_analysis") {
  auto k2 = component_analysis(parse_graph("graph undirected\nvertices 2\n0 1\n"));
  CHECK(k2.k2_components == 1);
  CHECK(k2.sum_tied_components == 1);
  CHECK(k2.components.size() == 1);

  auto doubled = component_analysis(double_edge_graph());
  CHECK(doubled.k2_components == 0);
  CHECK(doubled.sum_tied_components == 1);

  auto p3 = component_analysis(path_graph(3));
  CHECK(p3.k2_components == 0);
  CHECK(p3.sum_tied_components == 0);

  // two components: a K_2 and a loop vertex
  Multigraph g;
  g.n = 3;
  g.edges = {{0, 1}, {2, 2}};
  auto rep = component_analysis(g);
  CHECK(rep.components == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK(rep.k2_components == 1);

  // a loop on a 2-vertex component disqualifies it from both counts
  Multigraph loopy;
  loopy.n = 2;
  loopy.edges = {{0, 1}, {1, 1}};
  auto rl = component_analysis(loopy);
  CHECK(rl.k2_components == 0);
  CHECK(rl.sum_tied_components == 0);
}

TEST_CASE("magic_quotient") {
  // bowtie with S = {a, b, c}: triangle plus two loops at c, edge de dropped
  auto q = magic_quotient(bowtie_graph(), {0, 1, 2});
  Multigraph expected;
  expected.n = 3;
  expected.edges = {{0, 1}, {0, 2}, {1, 2}, {2, 2}, {2, 2}};
  CHECK(q == expected);

  // S = V is the identity
  for (const auto& g : {bowtie_graph(), triangle_pendant_graph(), path_graph(4)}) {
    VertexSubset all;
    for (int v = 0; v < g.n; ++v) all.push_back(v);
    CHECK(magic_quotient(g, all) == g);
  }

  // P_3 with S = {v1}: a single vertex with two loops
  auto mid = magic_quotient(path_graph(3), {1});
  CHECK(mid.n == 1);
  CHECK(mid.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 0}});

  CHECK_THROWS_AS(magic_quotient(path_graph(3), {}), usage_error);

  // edges meeting S keep their count
  for (const auto& g : connected_graphs(4)) {
    VertexSubset s{0, 2};
    int meeting = 0;
    for (auto [u, v] : g.edges)
      if (u == 0 || u == 2 || v == 0 || v == 2) ++meeting;
    CHECK(magic_quotient(g, s).edge_count() == meeting);
  }
}

namespace {

// Independent connectivity oracle (BFS, distinct from the generator's
// union-find) counting connected edge subsets of K_n.
int count_connected_bfs(int n) {
  std::vector<std::pair<int, int>> universe;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) universe.emplace_back(u, v);
  int total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << universe.size()); ++mask) {
    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) {
        adj[universe[i].first].push_back(universe[i].second);
        adj[universe[i].second].push_back(universe[i].first);
      }
    std::vector<bool> seen(n, false);
    std::vector<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
      int u = queue.back();
      queue.pop_back();
      for (int v : adj[u])
        if (!seen[v]) {
          seen[v] = true;
          ++reached;
          queue.push_back(v);
        }
    }
    if (reached == n) ++total;
  }
  return total;
}

}  // namespace

TEST_CASE("generate_connected_graphs counts and properties") {
  CHECK(connected_graphs(1).size() == 1);
  CHECK(connected_graphs(2).size() == 1);
  CHECK(connected_graphs(3).size() == 4);
  CHECK(connected_graphs(4).size() == 38);
  CHECK(connected_graphs(5).size() == 728);

  for (int n = 1; n <= 5; ++n)
    CHECK(static_cast<int>(connected_graphs(n).size()) == count_connected_bfs(n));

  // every generated graph is connected and simple
  for (const auto& g : connected_graphs(4)) {
    CHECK(component_analysis(g).components.size() == 1);
    std::set<std::pair<int, int>> seen;
    for (auto e : g.edges) {
      CHECK(e.first < e.second);
      CHECK(seen.insert(e).second);
    }
  }

  CHECK_THROWS_AS(connected_graphs(8), guardrail_error);
  CHECK_THROWS_AS(connected_graphs(0), guardrail_error);
}

TEST_CASE("stream is deterministic and restartable") {
  auto all = connected_graphs(4, true);
  ConnectedGraphStream restarted(4, true, 10);
  for (std::size_t i = 10; i < all.size(); ++i) {
    auto g = restarted.next();
    REQUIRE(g.has_value());
    CHECK(*g == all[i]);
  }
  CHECK_FALSE(restarted.next().has_value());

  // multi variants double one chosen edge, appended at the end
  ConnectedGraphStream stream(2, true);
  auto simple = stream.next();
  auto doubled = stream.next();
  REQUIRE(simple.has_value());
  REQUIRE(doubled.has_value());
  CHECK(*doubled == double_edge_graph());
  CHECK_FALSE(stream.next().has_value());
}
