// Benchmark comparing the serial reference enumerator, the OpenMP brute
// kernel, and the dp engine on fixed instances. All three must agree; the
// point is the timing spread.

#include "labcount/labelings.hpp"
#include "labcount/multigraph.hpp"
#include "labcount/threads.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

using namespace labcount;

namespace {

double time_ms(const std::function<Int()>& fn, Int& result) {
  auto start = std::chrono::steady_clock::now();
  result = fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

Multigraph bowtie() {
  Multigraph g;
  g.n = 5;
  g.edges = {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}};
  return g;
}

Multigraph complete(int n) {
  Multigraph g;
  g.n = n;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
  return g;
}

void run_case(const char* name, const Multigraph& g, const EnumSpec& spec,
              const DpTask& task) {
  Int serial, parallel, dp;
  double t_serial = time_ms([&] { return count_brute_serial(g, spec); }, serial);
  double t_parallel = time_ms([&] { return count_brute_parallel(g, spec); }, parallel);
  double t_dp = time_ms([&] { return count_dp(g, task); }, dp);
  bool agree = serial == parallel && parallel == dp;
  std::printf("%-28s serial %9.2f ms   omp %9.2f ms   dp %9.2f ms   count %-12s %s\n",
              name, t_serial, t_parallel, t_dp, serial.str().c_str(),
              agree ? "agree" : "MISMATCH");
}

}  // namespace

int main() {
  std::printf("labcount benchmark (threads: %d)\n", thread_budget());

  {
    Multigraph g = bowtie();
    VertexSubset all{0, 1, 2, 3, 4};
    EnumSpec spec;
    spec.k = 8;
    spec.predicate = LabelingPredicate::block_magic;
    spec.blocks = {all};
    DpTask task;
    task.edge_ranges.assign(6, {0, 8});
    task.blocks = {all};
    run_case("bowtie M_V(8)", g, spec, task);
  }
  {
    Multigraph g = complete(4);
    VertexSubset all{0, 1, 2, 3};
    long long r = 12;
    EnumSpec spec;
    spec.k = r;
    spec.predicate = LabelingPredicate::magic_index;
    spec.index = r;
    DpTask task;
    task.edge_ranges.assign(g.edges.size(), {0, r});
    task.blocks = {all};
    task.targets = {r};
    run_case("K_4 H(12)", g, spec, task);
  }
  {
    Multigraph g = complete(5);
    VertexSubset block{0, 1, 2};
    EnumSpec spec;
    spec.k = 4;
    spec.predicate = LabelingPredicate::block_magic;
    spec.blocks = {block};
    DpTask task;
    task.edge_ranges.assign(g.edges.size(), {0, 4});
    task.blocks = {block};
    run_case("K_5 M_{0,1,2}(4)", g, spec, task);
  }
  return 0;
}
