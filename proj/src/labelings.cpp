#include "labcount/labelings.hpp"

#include "labcount/errors.hpp"
#include "labcount/threads.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace labcount {

namespace {

constexpr long long kBruteLimit = 1'000'000'000LL;
constexpr std::size_t kDpStateLimit = std::size_t{1} << 25;

// Per-edge contributions to vertex sums. Undirected loops contribute their
// label once; directed loops contribute nothing.
std::vector<std::pair<int, int>> edge_contribs(const Multigraph& g, int e) {
  auto [u, v] = g.edges[e];
  if (!g.directed) {
    if (u == v) return {{u, 1}};
    return {{u, 1}, {v, 1}};
  }
  if (u == v) return {};
  return {{u, 1}, {v, -1}};
}

bool sums_distinct(const SumVector& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j]) return false;
  return true;
}

bool labels_distinct(const Labeling& l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (l[i] == l[j]) return false;
  return true;
}

bool predicate_holds(const Multigraph& g, const EnumSpec& spec, const Labeling& labels,
                     const SumVector& sums) {
  switch (spec.predicate) {
    case LabelingPredicate::none:
      return true;
    case LabelingPredicate::magic_index:
      for (int v = 0; v < g.n; ++v)
        if (sums[v] != spec.index) return false;
      return true;
    case LabelingPredicate::block_magic:
      for (const auto& block : spec.blocks) {
        for (std::size_t i = 1; i < block.size(); ++i)
          if (sums[block[i]] != sums[block[0]]) return false;
      }
      return true;
    case LabelingPredicate::distinct_sums:
      return sums_distinct(sums);
    case LabelingPredicate::distinct_labels_and_sums:
      return labels_distinct(labels) && sums_distinct(sums);
  }
  return false;
}

// Lexicographic odometer over per-edge ranges with incrementally maintained
// vertex sums. Visit may return false to stop early. Returns false if stopped.
template <class Visit>
bool odometer_scan(const Multigraph& g,
                   const std::vector<std::pair<long long, long long>>& ranges,
                   Visit&& visit) {
  const int q = g.edge_count();
  for (int e = 0; e < q; ++e)
    if (ranges[e].first > ranges[e].second) return true;  // empty range: nothing to visit

  Labeling labels(q);
  SumVector sums(g.n, 0);
  std::vector<std::vector<std::pair<int, int>>> contribs(q);
  for (int e = 0; e < q; ++e) {
    contribs[e] = edge_contribs(g, e);
    labels[e] = ranges[e].first;
    for (auto [v, c] : contribs[e]) sums[v] += c * labels[e];
  }

  while (true) {
    if (!visit(static_cast<const Labeling&>(labels), static_cast<const SumVector&>(sums)))
      return false;
    int e = q - 1;
    while (e >= 0 && labels[e] == ranges[e].second) {
      for (auto [v, c] : contribs[e]) sums[v] -= c * (labels[e] - ranges[e].first);
      labels[e] = ranges[e].first;
      --e;
    }
    if (e < 0) return true;
    ++labels[e];
    for (auto [v, c] : contribs[e]) sums[v] += c;
  }
}

void check_brute_guardrail(const Multigraph& g, long long lo, long long hi, bool force) {
  if (force || hi < lo) return;
  Int candidates = int_pow(Int(hi - lo + 1), static_cast<unsigned long>(g.edge_count()));
  if (candidates > kBruteLimit)
    throw guardrail_error("brute-force enumeration of " + candidates.str() +
                          " labelings exceeds the 10^9 guardrail (use force to override)");
}

std::pair<long long, long long> label_range(const EnumSpec& spec) {
  long long lo = spec.positivity == Positivity::positive ? 1 : 0;
  return {lo, spec.k};
}

}  // namespace

void validate_blocks(const Multigraph& g, const BlockSpec& blocks) {
  std::vector<bool> seen(g.n, false);
  for (const auto& block : blocks) {
    validate_subset(g, block);
    for (int v : block) {
      if (seen[v]) throw usage_error("blocks overlap at vertex " + std::to_string(v));
      seen[v] = true;
    }
  }
}

SumVector vertex_sums(const Multigraph& g, const Labeling& labels) {
  if (static_cast<int>(labels.size()) != g.edge_count())
    throw usage_error("labeling length does not match edge count");
  SumVector sums(g.n, 0);
  for (int e = 0; e < g.edge_count(); ++e)
    for (auto [v, c] : edge_contribs(g, e)) sums[v] += c * labels[e];
  return sums;
}

void enumerate_labelings(const Multigraph& g, const EnumSpec& spec,
                         const std::function<bool(const Labeling&)>& visit) {
  if (spec.predicate == LabelingPredicate::block_magic) validate_blocks(g, spec.blocks);
  auto [lo, hi] = label_range(spec);
  check_brute_guardrail(g, lo, hi, spec.force);
  if (hi < lo) {
    if (g.edge_count() == 0) {
      Labeling empty;
      if (predicate_holds(g, spec, empty, SumVector(g.n, 0))) visit(empty);
    }
    return;
  }
  std::vector<std::pair<long long, long long>> ranges(g.edge_count(), {lo, hi});
  odometer_scan(g, ranges, [&](const Labeling& l, const SumVector& s) {
    if (predicate_holds(g, spec, l, s)) return visit(l);
    return true;
  });
}

Int count_brute_serial(const Multigraph& g, const EnumSpec& spec) {
  if (spec.predicate == LabelingPredicate::block_magic) validate_blocks(g, spec.blocks);
  auto [lo, hi] = label_range(spec);
  check_brute_guardrail(g, lo, hi, spec.force);
  if (hi < lo)
    return g.edge_count() == 0 &&
                   predicate_holds(g, spec, {}, SumVector(g.n, 0))
               ? 1
               : 0;
  Int count = 0;
  std::vector<std::pair<long long, long long>> ranges(g.edge_count(), {lo, hi});
  odometer_scan(g, ranges, [&](const Labeling& l, const SumVector& s) {
    if (predicate_holds(g, spec, l, s)) ++count;
    return true;
  });
  return count;
}

Int count_brute_parallel(const Multigraph& g, const EnumSpec& spec) {
  if (spec.predicate == LabelingPredicate::block_magic) validate_blocks(g, spec.blocks);
  auto [lo, hi] = label_range(spec);
  check_brute_guardrail(g, lo, hi, spec.force);
  if (g.edge_count() == 0 || hi < lo) return count_brute_serial(g, spec);

  const long long span = hi - lo + 1;
  // Parallelism only pays off for big scans; the split on the leading label
  // yields identical totals either way.
  Int per_leading = int_pow(Int(span), static_cast<unsigned long>(g.edge_count() - 1));
  if (per_leading < 4096) return count_brute_serial(g, spec);

  std::vector<Int> partial(static_cast<std::size_t>(span), Int(0));
#pragma omp parallel for schedule(dynamic) num_threads(thread_budget())
  for (long long i = 0; i < span; ++i) {
    std::vector<std::pair<long long, long long>> ranges(g.edge_count(), {lo, hi});
    ranges[0] = {lo + i, lo + i};
    Int local = 0;
    odometer_scan(g, ranges, [&](const Labeling& l, const SumVector& s) {
      if (predicate_holds(g, spec, l, s)) ++local;
      return true;
    });
    partial[static_cast<std::size_t>(i)] = std::move(local);
  }
  Int total = 0;
  for (const Int& p : partial) total += p;
  return total;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<long long>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (long long x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

constexpr long long kUnsetTarget = std::numeric_limits<long long>::min();

}  // namespace

// Dynamic programming over edges, memoized on the partial-sum tuple at
// constrained vertices. Edges are processed vertex-major so vertices complete
// early; a block's common sum is either fixed by the task or discovered at
// the block's first completed vertex and checked at every later one. States
// are pruned by the window of sums still reachable with the remaining edges.
Int count_dp(const Multigraph& g, const DpTask& task) {
  const int q = g.edge_count();
  if (static_cast<int>(task.edge_ranges.size()) != q)
    throw usage_error("edge range list does not match edge count");
  validate_blocks(g, task.blocks);
  if (!task.targets.empty() && task.targets.size() != task.blocks.size())
    throw usage_error("target list does not match block count");

  for (int e = 0; e < q; ++e)
    if (task.edge_ranges[e].first > task.edge_ranges[e].second) return 0;

  const int nblocks = static_cast<int>(task.blocks.size());
  std::vector<std::optional<long long>> fixed(nblocks);
  for (int b = 0; b < nblocks; ++b)
    if (!task.targets.empty()) fixed[b] = task.targets[b];

  // A vertex is constrained if its block has two members or a fixed target.
  std::vector<int> block_of(g.n, -1);
  for (int b = 0; b < nblocks; ++b) {
    if (task.blocks[b].size() < 2 && !fixed[b].has_value()) continue;
    for (int v : task.blocks[b]) block_of[v] = b;
  }

  std::vector<std::vector<std::pair<int, int>>> contribs(q);
  std::vector<bool> edge_constrained(q, false);
  for (int e = 0; e < q; ++e) {
    contribs[e] = edge_contribs(g, e);
    for (auto [v, c] : contribs[e])
      if (block_of[v] >= 0) edge_constrained[e] = true;
  }

  Int multiplier = 1;
  for (int e = 0; e < q; ++e)
    if (!edge_constrained[e])
      multiplier *= Int(task.edge_ranges[e].second - task.edge_ranges[e].first + 1);

  // Vertex-major stage order: all constrained-incident edges of vertex 0
  // first, then the rest of vertex 1's, and so on.
  std::vector<int> stages;
  {
    std::vector<bool> placed(q, false);
    for (int v = 0; v < g.n; ++v)
      for (int e = 0; e < q; ++e)
        if (!placed[e] && edge_constrained[e] &&
            (g.edges[e].first == v || g.edges[e].second == v)) {
          placed[e] = true;
          stages.push_back(e);
        }
  }
  const int ns = static_cast<int>(stages.size());

  std::vector<int> first_touch(g.n, ns), last_touch(g.n, -1);
  for (int i = 0; i < ns; ++i)
    for (auto [v, c] : contribs[stages[i]])
      if (block_of[v] >= 0) {
        first_touch[v] = std::min(first_touch[v], i);
        last_touch[v] = std::max(last_touch[v], i);
      }

  // Suffix bounds on the sum still collectable at v from stages >= i.
  std::vector<std::vector<long long>> gain_min(ns + 1, std::vector<long long>(g.n, 0));
  std::vector<std::vector<long long>> gain_max(ns + 1, std::vector<long long>(g.n, 0));
  for (int i = ns - 1; i >= 0; --i) {
    gain_min[i] = gain_min[i + 1];
    gain_max[i] = gain_max[i + 1];
    auto [lo, hi] = task.edge_ranges[stages[i]];
    for (auto [v, c] : contribs[stages[i]]) {
      if (block_of[v] < 0) continue;
      gain_min[i][v] += c > 0 ? c * lo : c * hi;
      gain_max[i][v] += c > 0 ? c * hi : c * lo;
    }
  }

  // Vertices with no constrained incidences have sum 0, settled up front.
  // For a free block that means the target is discovered to be 0 already.
  std::vector<long long> block_floor(nblocks, std::numeric_limits<long long>::min());
  std::vector<long long> block_cap(nblocks, std::numeric_limits<long long>::max());
  for (int b = 0; b < nblocks; ++b) {
    bool constrains = false;
    for (int v : task.blocks[b])
      if (block_of[v] == b) constrains = true;
    if (!constrains) continue;
    for (int v : task.blocks[b]) {
      if (last_touch[v] < 0) {
        if (fixed[b].has_value() && *fixed[b] != 0) return 0;
        fixed[b] = 0;
      }
      block_floor[b] = std::max(block_floor[b], gain_min[0][v]);
      block_cap[b] = std::min(block_cap[b], gain_max[0][v]);
    }
    if (fixed[b].has_value() && (*fixed[b] < block_floor[b] || *fixed[b] > block_cap[b]))
      return 0;
  }

  std::vector<int> block_min_complete(nblocks, ns), block_max_complete(nblocks, -1);
  for (int v = 0; v < g.n; ++v)
    if (block_of[v] >= 0 && last_touch[v] >= 0) {
      int b = block_of[v];
      block_min_complete[b] = std::min(block_min_complete[b], last_touch[v]);
      block_max_complete[b] = std::max(block_max_complete[b], last_touch[v]);
    }

  auto vertex_slot_live = [&](int v, int boundary) {
    return block_of[v] >= 0 && first_touch[v] < boundary && last_touch[v] >= boundary;
  };
  auto block_slot_live = [&](int b, int boundary) {
    return !fixed[b].has_value() && block_min_complete[b] < boundary &&
           block_max_complete[b] >= boundary;
  };

  std::vector<int> completing_at(ns, 0);
  std::vector<std::vector<int>> completions(ns);
  for (int v = 0; v < g.n; ++v)
    if (block_of[v] >= 0 && last_touch[v] >= 0) completions[last_touch[v]].push_back(v);
  for (auto& c : completions) std::sort(c.begin(), c.end());

  using StateMap = std::unordered_map<std::vector<long long>, Int, VecHash>;
  StateMap states;
  states.emplace(std::vector<long long>{}, Int(1));  // boundary-0 layout is empty

  std::vector<long long> sums(g.n, 0);
  std::vector<long long> targets(nblocks, kUnsetTarget);

  for (int i = 0; i < ns; ++i) {
    int e = stages[i];
    auto [lo, hi] = task.edge_ranges[e];
    StateMap next;
    next.reserve(states.size() * 2);

    for (const auto& [key, cnt] : states) {
      // Decode boundary-i layout: vertex slots ascending, then block slots.
      std::size_t pos = 0;
      for (int v = 0; v < g.n; ++v) sums[v] = vertex_slot_live(v, i) ? key[pos++] : 0;
      for (int b = 0; b < nblocks; ++b)
        targets[b] = block_slot_live(b, i) ? key[pos++] : kUnsetTarget;

      for (long long label = lo; label <= hi; ++label) {
        bool dead = false;
        for (auto [v, c] : contribs[e])
          if (block_of[v] >= 0) sums[v] += c * label;

        std::vector<long long> discovered;  // rollback log for targets
        for (int v : completions[i]) {
          int b = block_of[v];
          long long want = fixed[b].has_value() ? *fixed[b] : targets[b];
          if (want == kUnsetTarget) {
            targets[b] = sums[v];
            discovered.push_back(b);
          } else if (sums[v] != want) {
            dead = true;
            break;
          }
        }

        if (!dead) {
          for (int v = 0; v < g.n; ++v) {
            if (block_of[v] < 0 || last_touch[v] <= i) continue;
            // v completes later; prune by the window of sums still reachable.
            int b = block_of[v];
            long long want = fixed[b].has_value() ? *fixed[b] : targets[b];
            if (want != kUnsetTarget) {
              if (sums[v] + gain_max[i + 1][v] < want || sums[v] + gain_min[i + 1][v] > want) {
                dead = true;
                break;
              }
            } else {
              if (sums[v] + gain_max[i + 1][v] < block_floor[b] ||
                  sums[v] + gain_min[i + 1][v] > block_cap[b]) {
                dead = true;
                break;
              }
            }
          }
        }

        if (!dead) {
          std::vector<long long> nkey;
          for (int v = 0; v < g.n; ++v)
            if (vertex_slot_live(v, i + 1)) nkey.push_back(sums[v]);
          for (int b = 0; b < nblocks; ++b)
            if (block_slot_live(b, i + 1)) nkey.push_back(targets[b]);
          next[std::move(nkey)] += cnt;
        }

        for (long long b : discovered) targets[static_cast<int>(b)] = kUnsetTarget;
        for (auto [v, c] : contribs[e])
          if (block_of[v] >= 0) sums[v] -= c * label;
      }
    }
    states = std::move(next);
    if (states.empty()) return 0;
    if (states.size() > kDpStateLimit && !task.force)
      throw guardrail_error("dp state table exceeded 2^25 entries (use force to override)");
  }

  Int total = 0;
  for (const auto& [key, cnt] : states) total += cnt;
  return total * multiplier;
}

Int count_magic_by_index(const Multigraph& g, long long r, Engine engine, bool force) {
  if (g.directed)
    throw usage_error("count_magic_by_index requires an undirected graph; see the directed module");
  if (r < 0) throw usage_error("index must be nonnegative");
  VertexSubset all(g.n);
  for (int v = 0; v < g.n; ++v) all[v] = v;
  if (engine == Engine::dp) {
    DpTask task;
    task.edge_ranges.assign(g.edge_count(), {0, r});
    task.blocks = {all};
    task.targets = {r};
    task.force = force;
    return count_dp(g, task);
  }
  EnumSpec spec;
  spec.k = r;
  spec.positivity = Positivity::nonneg;
  spec.predicate = LabelingPredicate::magic_index;
  spec.index = r;
  spec.force = force;
  return count_brute_parallel(g, spec);
}

Int count_block_magic(const Multigraph& g, const BlockSpec& blocks, long long k,
                      Positivity positivity, Engine engine, bool force) {
  if (k < 0) throw usage_error("k must be nonnegative");
  validate_blocks(g, blocks);
  if (engine == Engine::dp) {
    DpTask task;
    long long lo = positivity == Positivity::positive ? 1 : 0;
    if (k < lo) return g.edge_count() == 0 ? 1 : 0;
    task.edge_ranges.assign(g.edge_count(), {lo, k});
    task.blocks = blocks;
    task.force = force;
    return count_dp(g, task);
  }
  EnumSpec spec;
  spec.k = k;
  spec.positivity = positivity;
  spec.predicate = LabelingPredicate::block_magic;
  spec.blocks = blocks;
  spec.force = force;
  return count_brute_parallel(g, spec);
}

Int count_weak_antimagic_direct(const Multigraph& g, long long k, bool force) {
  if (k < 0) throw usage_error("k must be nonnegative");
  EnumSpec spec;
  spec.k = k;
  spec.positivity = Positivity::positive;
  spec.predicate = LabelingPredicate::distinct_sums;
  spec.force = force;
  return count_brute_parallel(g, spec);
}

Int count_strict_antimagic(const Multigraph& g, long long k, bool force) {
  if (k < 0) throw usage_error("k must be nonnegative");
  if (k < g.edge_count()) return 0;  // pigeonhole
  EnumSpec spec;
  spec.k = k;
  spec.positivity = Positivity::positive;
  spec.predicate = LabelingPredicate::distinct_labels_and_sums;
  spec.force = force;
  return count_brute_parallel(g, spec);
}

}  // namespace labcount
