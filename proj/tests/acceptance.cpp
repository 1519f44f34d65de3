// Acceptance run: one PASS/FAIL line per criterion. `--quick` skips the
// million-edge scaling run.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "cut_forest.hpp"
#include "naive.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "score_array.hpp"
#include "support.hpp"

using namespace ktp;
using test::Graph;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failed = 0;

void report(int id, bool pass, const std::string& detail) {
  std::printf("criterion %d %s: %s\n", id, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failed;
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

Vertex pick(Rng& rng, Vertex lo, Vertex hi) {
  return lo + static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Meets verified inside pipeline runs, shared with criterion 8.
std::int64_t meets_checked = 0;
std::int64_t meets_rejected = 0;

template <class Run>
void count_meets(Run&& run) {
  try {
    meets_checked += run();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kVerification) throw;
    ++meets_rejected;
  }
}

void oracle_equivalence() {
  const auto start = Clock::now();
  Rng rng(20240601);
  int runs = 0;
  int mismatches = 0;
  PipelineOptions opts;
  opts.keep_cuts = false;
  opts.verify = true;
  for (int rep = 0; rep < 200; ++rep) {
    const Graph g = test::random_connected(pick(rng, 4, 9), 8, rng);
    opts.packing.seed = 1000 + static_cast<std::uint64_t>(rep);
    const std::int64_t lambda = oracle_min_cut(g).weight;
    for (Ratio eps : {Ratio{0, 1}, Ratio{1, 16}}) {
      ++runs;
      const OracleKt<std::int64_t> want = oracle_kt_partition(g, eps);
      bool ok = false;
      count_meets([&] {
        const KtResult<std::int64_t> got = kt_partition(g, eps, opts);
        ok = got.lambda == lambda && want.lambda == lambda && got.nontrivial == want.nontrivial &&
             got.with_trivial == want.with_trivial;
        return got.trees_distinct;
      });
      if (!ok) ++mismatches;
    }
  }
  const double t = seconds_since(start);
  report(1, mismatches == 0 && t < 60.0,
         fmt("%d/%d runs equal the oracle (partition and lambda), %.2f s (limit 60 s)", runs - mismatches, runs, t));
}

// Tree edges grouped by the forest, as a partition over positions in t.edges().
Partition forest_components(const RootedTree& t, const std::vector<CutId<std::int64_t>>& edges) {
  const auto tree_edges = t.edges();
  std::vector<Vertex> slot(static_cast<std::size_t>(t.size()), -1);
  for (std::size_t i = 0; i < tree_edges.size(); ++i) slot[tree_edges[i]] = static_cast<Vertex>(i);
  std::vector<std::int64_t> label(tree_edges.size());
  std::iota(label.begin(), label.end(), 0);
  for (const auto& c : edges) {
    const std::int64_t a = label[slot[c.e]];
    const std::int64_t b = label[slot[c.f]];
    for (auto& l : label) {
      if (l == b) l = a;
    }
  }
  return Partition::from_labels(label);
}

void forest_components_exhaustive() {
  Rng rng(7007);
  std::vector<Graph> graphs = {test::cycle4(), test::bridged_triangles(), test::complete(4), test::complete(5),
                               test::complete(7), test::star(6), test::broom(1)};
  for (int rep = 0; rep < 40; ++rep) graphs.push_back(test::random_connected(pick(rng, 3, 7), 8, rng));
  std::int64_t trees = 0;
  std::int64_t checks = 0;
  std::int64_t mismatches = 0;
  for (const Graph& g : graphs) {
    const std::int64_t lambda = oracle_min_cut(g).weight;
    const std::int64_t betas[] = {lambda, scale_weight(lambda, Ratio{17, 16}), 2 * lambda};
    test::for_each_spanning_tree(g, [&](const std::vector<EdgeId>& tree) {
      ++trees;
      const TreeIndex index(RootedTree::from_graph_edges(g, tree));
      const TreeCutContext<std::int64_t> ctx(g, index);
      const PairLists<std::int64_t> lists = build_pair_lists(ctx);
      for (std::int64_t beta : betas) {
        ++checks;
        const CutForest<std::int64_t> forest = h_spanning_forest(ctx, lists, beta);
        if (forest_components(index.tree, forest.edges) != test::brute_h_components(g, index.tree, beta)) ++mismatches;
      }
    });
  }
  report(2, mismatches == 0 && trees > 0,
         fmt("%lld spanning trees of %zu graphs (n <= 7), %lld thresholds, %lld mismatches", static_cast<long long>(trees),
             graphs.size(), static_cast<long long>(checks), static_cast<long long>(mismatches)));
}

void score_structures() {
  const auto start = Clock::now();
  constexpr int kOps = 100000;
  Rng rng(31337);
  std::int64_t mismatches = 0;
  auto random_index = [&](std::int32_t n) { return static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(n))); };
  auto random_delta = [&] { return static_cast<std::int64_t>(uniform_below(rng, 41)) - 20; };

  {
    constexpr std::int32_t n = 1024;
    test::NaiveScores ref;
    for (std::int32_t i = 0; i < n; ++i) {
      ref.score.push_back(static_cast<std::int64_t>(uniform_below(rng, 1000)));
      ref.color.push_back(static_cast<Color>(uniform_below(rng, 4)));
    }
    ScoreArray<std::int64_t> cat(ref.score, ref.color);
    MinArray<std::int64_t> plain(std::span<const std::int64_t>(ref.score));
    for (int op = 0; op < kOps; ++op) {
      std::int32_t lo = random_index(n);
      std::int32_t hi = random_index(n);
      if (lo > hi) std::swap(lo, hi);
      if (uniform_below(rng, 2) == 0) {
        const std::int64_t d = random_delta();
        cat.add(d, lo, hi);
        plain.add(d, lo, hi);
        ref.add(d, lo, hi);
        continue;
      }
      const auto want = ref.top_two(lo, hi);
      const auto got = cat.cat_top_two(lo, hi);
      if (got.first.index != want.first || got.first.score != ref.score[want.first]) ++mismatches;
      if (got.second.index != want.second) ++mismatches;
      if (want.second >= 0 && got.second.score != ref.score[want.second]) ++mismatches;
      const auto m = plain.min(lo, hi);
      if (m.index != want.first || m.score != ref.score[want.first]) ++mismatches;
    }
    for (std::int32_t i = 0; i < n; ++i) {
      if (cat.score(i) != ref.score[i] || plain.score(i) != ref.score[i]) ++mismatches;
    }
  }

  {
    constexpr Vertex n = 500;
    const TreeIndex index(test::random_tree(n, rng));
    const RootedTree& t = index.tree;
    test::NaiveTreeScores ref{&t, {}, {}};
    for (Vertex v = 0; v < n; ++v) {
      ref.score.push_back(static_cast<std::int64_t>(uniform_below(rng, 1000)));
      ref.color.push_back(static_cast<Color>(uniform_below(rng, 4)));
    }
    TreeScores<std::int64_t> cat(index, ref.score, ref.color);
    TreeMinScores<std::int64_t> plain(index, ref.score);
    for (int op = 0; op < kOps; ++op) {
      const Vertex u = random_index(n);
      const Vertex v = random_index(n);
      if (uniform_below(rng, 2) == 0) {
        const std::int64_t d = random_delta();
        cat.add_path(d, u, v);
        plain.add_path(d, u, v, index.lca.lca(u, v));
        ref.add_path(d, u, v);
        continue;
      }
      const auto want = ref.top_two(u);
      const auto got = u == t.root() ? cat.cat_top_two_all() : cat.cat_top_two_subtree(u);
      if (got.first.valid() != (want.first != kNoVertex)) {
        ++mismatches;
        continue;
      }
      if (want.first == kNoVertex) continue;
      if (got.first.score != ref.score[want.first]) ++mismatches;
      if (got.second.valid() != (want.second != kNoVertex)) ++mismatches;
      if (want.second != kNoVertex && got.second.valid() && got.second.score != ref.score[want.second]) ++mismatches;
      if (got.second.valid() && ref.color[got.first.edge] == ref.color[got.second.edge]) ++mismatches;
      if (u != t.root()) {
        const auto m = plain.min_subtree(u);
        if (!m.valid() || m.score != ref.score[want.first]) ++mismatches;
      }
    }
    for (Vertex e : t.edges()) {
      if (cat.score(e) != ref.score[e] || plain.score(e) != ref.score[e]) ++mismatches;
    }
  }
  const double t = seconds_since(start);
  report(3, mismatches == 0 && t < 10.0,
         fmt("%d ops on arrays (n=1024) and %d on trees (n=500), %lld mismatches, %.2f s (limit 10 s)", kOps, kOps,
             static_cast<long long>(mismatches), t));
}

void trivial_rule() {
  Rng rng(4242);
  std::int64_t checks = 0;
  std::int64_t mismatches = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const Vertex n = pick(rng, 2, 12);
    const RootedTree t = test::random_tree(n, rng);
    for (Vertex e : t.edges()) {
      const std::int32_t s1 = test::shore_size(test::brute_shore(t, e));
      ++checks;
      if (is_trivial_single(t, e) != (s1 == 1 || s1 == n - 1)) ++mismatches;
      for (Vertex f : t.edges()) {
        if (e == f) continue;
        const std::int32_t s2 = test::shore_size(test::brute_shore(t, e, f));
        ++checks;
        if (is_trivial_pair(t, e, f) != (s2 == 1 || s2 == n - 1)) ++mismatches;
      }
    }
  }
  report(4, mismatches == 0,
         fmt("%lld single and pair cuts on 50 trees (n <= 12), %lld mismatches", static_cast<long long>(checks),
             static_cast<long long>(mismatches)));
}

// Heavy cycle plus light chords: many crossing near-minimum cuts.
Graph cycle_with_chords(Vertex n, Rng& rng) {
  std::vector<Edge<std::int64_t>> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n, 4});
  const Vertex chords = pick(rng, 0, n / 4);
  for (Vertex i = 0; i < chords; ++i) {
    const Vertex u = pick(rng, 0, n - 1);
    const Vertex v = pick(rng, 0, n - 1);
    if (u != v) edges.push_back({u, v, 1});
  }
  return test::make_graph(n, edges);
}

void packing_adequacy() {
  Rng rng(9090);
  int failures = 0;
  std::int64_t cuts = 0;
  constexpr int kSeeds = 100;
  for (int seed = 0; seed < kSeeds; ++seed) {
    const Vertex n = pick(rng, 6, 13);
    const Graph g = seed % 2 == 0 ? test::random_connected(n, 8, rng) : cycle_with_chords(n, rng);
    const std::int64_t lambda = oracle_min_cut(g).weight;
    PackingConfig cfg;
    cfg.seed = 77000 + static_cast<std::uint64_t>(seed);
    const TreeBundle bundle = pack_trees(g, cfg);
    bool all_covered = true;
    for (const auto& side : test::near_min_cuts(g, scale_weight(lambda, Ratio{17, 16}))) {
      ++cuts;
      bool covered = false;
      for (const auto& tree : bundle.trees) {
        if (test::tree_crossings(g, tree, side) <= 2) {
          covered = true;
          break;
        }
      }
      all_covered = all_covered && covered;
    }
    if (!all_covered) ++failures;
  }
  const double rate = static_cast<double>(failures) / kSeeds;
  report(5, rate <= 0.01,
         fmt("%d/%d seeds with an uncovered near-minimum cut (%lld cuts checked), rate %.3f (limit 0.01)", failures,
             kSeeds, static_cast<long long>(cuts), rate));
}

Graph unit_weights(const Graph& g) {
  std::vector<Edge<std::int64_t>> edges;
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, 1});
  return Graph::from_edges(g.num_vertices(), std::move(edges));
}

void edge_connectivity() {
  Rng rng(6464);
  int mismatches = 0;
  int bound_violations = 0;
  int runs = 0;
  PipelineOptions opts;
  opts.keep_cuts = false;
  auto check = [&](const Graph& g, std::uint64_t seed) {
    ++runs;
    opts.packing.seed = seed;
    const ConnectivityResult r = edge_connectivity_simple(g, opts);
    if (r.value != oracle_min_cut(g).weight || test::cut_weight(g, r.shore) != r.value) ++mismatches;
    if (static_cast<double>(r.contracted_edges) > r.contracted_edge_bound) ++bound_violations;
    return r.value;
  };
  for (int rep = 0; rep < 100; ++rep) {
    const Vertex n = pick(rng, 8, 64);
    const auto seed = 500 + static_cast<std::uint64_t>(rep);
    Graph g;
    switch (rep % 3) {
      case 0: {
        const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const std::int64_t m = std::min<std::int64_t>(max_m, n + static_cast<std::int64_t>(uniform_below(rng, 6 * n)));
        const std::int64_t params[] = {n, m, 1};
        g = random_graph(GraphKind::kGnm, params, seed);
        break;
      }
      case 1: {
        const std::int64_t half = n / 2;
        const std::int64_t params[] = {n, half * 3, 1 + static_cast<std::int64_t>(uniform_below(rng, 4)), 1};
        g = unit_weights(random_graph(GraphKind::kPlantedCut, params, seed));
        break;
      }
      default: {
        const std::int64_t a = pick(rng, 3, n / 2);
        const std::int64_t params[] = {a, n - a};
        g = random_graph(GraphKind::kBridgedCliques, params, seed);
        break;
      }
    }
    check(g, seed);
  }
  const std::int64_t petersen = check(test::petersen(), 1);
  const std::int64_t k4 = check(test::complete(4), 1);
  report(6, mismatches == 0 && bound_violations == 0 && petersen == 3 && k4 == 3,
         fmt("%d/%d runs equal Stoer-Wagner, Petersen=%lld, K4=%lld, %d contracted-size bound violations", runs - mismatches,
             runs, static_cast<long long>(petersen), static_cast<long long>(k4), bound_violations));
}

void scaling(bool quick) {
  if (quick) {
    std::printf("criterion 7 SKIP: --quick\n");
    return;
  }
  PipelineOptions opts;
  opts.keep_cuts = false;
  opts.packing.seed = 1;
  double times[2] = {0, 0};
  const std::int64_t sizes[] = {100000, 1000000};
  for (int i = 0; i < 2; ++i) {
    const std::int64_t params[] = {10000, sizes[i], 8};
    const Graph g = random_graph(GraphKind::kGnm, params, 1);
    const auto start = Clock::now();
    kt_partition(g, Ratio{1, 16}, opts);
    times[i] = seconds_since(start);
  }
  const double ratio = times[1] / times[0];
  report(7, ratio <= 15.0 && times[1] < 120.0,
         fmt("n=10000: m=1e5 %.2f s, m=1e6 %.2f s, ratio %.2f (limit 15), large run limit 120 s", times[0], times[1],
             ratio));
}

void meets_verified() {
  // Pipeline runs on larger graphs, each per-tree meet checked exactly.
  PipelineOptions opts;
  opts.keep_cuts = false;
  opts.verify = true;
  Rng rng(1313);
  for (int rep = 0; rep < 20; ++rep) {
    const Vertex n = pick(rng, 20, 300);
    const std::int64_t params[] = {n, 3 * static_cast<std::int64_t>(n), 4};
    const Graph g = random_graph(GraphKind::kGnm, params, 900 + static_cast<std::uint64_t>(rep));
    opts.packing.seed = static_cast<std::uint64_t>(rep);
    count_meets([&] { return kt_partition(g, Ratio{1, 16}, opts).trees_distinct; });
  }
  // Random cut families on random trees.
  for (int rep = 0; rep < 2000; ++rep) {
    const Vertex n = pick(rng, 2, 60);
    const RootedTree t = test::random_tree(n, rng);
    const auto edges = t.edges();
    CutFamily family;
    const auto count = uniform_below(rng, 12);
    for (std::uint64_t i = 0; i < count; ++i) {
      const Vertex e = edges[uniform_below(rng, edges.size())];
      const Vertex f = edges[uniform_below(rng, edges.size())];
      if (e == f) {
        family.singles.push_back(e);
      } else {
        family.pairs.emplace_back(e, f);
      }
    }
    ++meets_checked;
    if (!verify_meet(t, family, meet_of_respecting_cuts(t, family, static_cast<std::uint64_t>(rep)))) ++meets_rejected;
  }
  report(8, meets_rejected == 0 && meets_checked > 0,
         fmt("%lld meets verified, %lld rejected", static_cast<long long>(meets_checked),
             static_cast<long long>(meets_rejected)));
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const std::function<void()> steps[] = {oracle_equivalence, forest_components_exhaustive, score_structures,
                                         trivial_rule,       packing_adequacy,             edge_connectivity,
                                         [&] { scaling(quick); }, meets_verified};
  int id = 1;
  for (const auto& step : steps) {
    try {
      step();
    } catch (const std::exception& e) {
      report(id, false, std::string("exception: ") + e.what());
    }
    ++id;
  }
  std::printf("%s: %d criteria failed\n", failed == 0 ? "PASS" : "FAIL", failed);
  return failed == 0 ? 0 : 1;
}
