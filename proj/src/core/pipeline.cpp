#include "pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <thread>

#include "cut_forest.hpp"
#include "pair_lists.hpp"
#include "respecting_cuts.hpp"

namespace ktp {

namespace {

// Runs body(i) for i in [0, count) on up to `workers` threads. Results must
// be written to per-index slots so output does not depend on scheduling.
template <class Body>
void parallel_for(std::int32_t count, std::int32_t workers, Body&& body) {
  if (workers <= 1 || count <= 1) {
    for (std::int32_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::int32_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const std::int32_t threads = std::min(workers, count);
  for (std::int32_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::int32_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

template <class W>
std::vector<std::vector<EdgeId>> bundle_trees(const WeightedGraph<W>& g, const PipelineOptions& options,
                                              std::int32_t& packed) {
  std::vector<std::vector<EdgeId>> trees = pack_trees(g, options.packing).trees;
  if (options.paranoid) {
    PackingConfig twice = options.packing;
    twice.tree_multiplier *= 2;
    twice.seed = derive_seed(options.packing.seed, 0x70617261ULL);
    auto more = pack_trees(g, twice).trees;
    trees.insert(trees.end(), more.begin(), more.end());
  }
  packed = static_cast<std::int32_t>(trees.size());
  // Identical trees contribute identical cuts; process each once.
  std::sort(trees.begin(), trees.end());
  trees.erase(std::unique(trees.begin(), trees.end()), trees.end());
  return trees;
}

template <class W>
struct TreeMinima {
  CutId<W> overall;
  CutId<W> nontrivial_pair;
};

template <class W>
std::vector<TreeMinima<W>> minima_per_tree(const WeightedGraph<W>& g, const std::vector<std::vector<EdgeId>>& trees,
                                           std::int32_t workers) {
  std::vector<TreeMinima<W>> out(trees.size());
  parallel_for(static_cast<std::int32_t>(trees.size()), workers, [&](std::int32_t i) {
    TreeIndex index(RootedTree::from_graph_edges(g, trees[i]));
    TreeCutContext<W> ctx(g, index);
    RespectingMinima<W> m = respecting_minima(ctx);
    out[i] = TreeMinima<W>{m.overall, m.nontrivial_pair};
  });
  return out;
}

template <class W>
std::size_t best_tree(const std::vector<TreeMinima<W>>& minima) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < minima.size(); ++i) {
    if (minima[i].overall.weight < minima[best].overall.weight) best = i;
  }
  return best;
}

template <class W>
std::vector<char> shore_in_tree(const WeightedGraph<W>& g, const std::vector<EdgeId>& tree, const CutId<W>& cut) {
  RootedTree t = RootedTree::from_graph_edges(g, tree);
  return cut_shore(t, cut.e, cut.f);
}

}  // namespace

template <class W>
KtResult<W> kt_partition_scaled(const WeightedGraph<W>& g, Ratio factor, const PipelineOptions& options) {
  require_cut_input(g);
  if (factor.den <= 0 || factor.num < factor.den) throw Error(ErrorCode::kInvalidArgument, "threshold factor below 1");
  const Vertex n = g.num_vertices();
  KtResult<W> result;
  result.epsilon = Ratio{factor.num - factor.den, factor.den};

  const auto trees = bundle_trees(g, options, result.trees_packed);
  result.trees_distinct = static_cast<std::int32_t>(trees.size());
  const auto minima = minima_per_tree(g, trees, options.workers);
  const std::size_t best = best_tree(minima);
  result.lambda = minima[best].overall.weight;
  result.min_cut_shore = shore_in_tree(g, trees[best], minima[best].overall);
  const W beta = scale_weight(result.lambda, factor);
  result.threshold = beta;

  const bool verify = options.verify || options.paranoid;
  std::vector<Partition> parts(trees.size());
  std::vector<TreeCuts> cuts(options.keep_cuts ? trees.size() : 0);
  std::vector<char> with_forest(trees.size(), 0);
  parallel_for(static_cast<std::int32_t>(trees.size()), options.workers, [&](std::int32_t i) {
    TreeIndex index(RootedTree::from_graph_edges(g, trees[i]));
    const RootedTree& t = index.tree;
    TreeCutContext<W> ctx(g, index);
    CutFamily family;
    for (Vertex e : t.edges()) {
      if (!is_trivial_single(t, e) && WeightTraits<W>::leq(ctx.cost(e), beta)) family.singles.push_back(e);
    }
    // Without a non-trivial pair under the threshold the cut graph has no
    // edges, and its spanning forest is empty.
    const CutId<W>& pair = minima[i].nontrivial_pair;
    if (pair.valid() && WeightTraits<W>::leq(pair.weight, beta)) {
      with_forest[i] = 1;
      const PairLists<W> lists = build_pair_lists(ctx);
      for (const CutId<W>& c : h_spanning_forest(ctx, lists, beta).edges) family.pairs.emplace_back(c.e, c.f);
    }
    parts[i] = meet_of_respecting_cuts(t, family, derive_seed(options.packing.seed, 0x6d656574ULL + static_cast<std::uint64_t>(i)));
    if (verify && !verify_meet(t, family, parts[i])) {
      throw Error(ErrorCode::kVerification, "meet of respecting cuts failed verification");
    }
    if (options.keep_cuts) {
      TreeCuts& tc = cuts[i];
      tc.tree = trees[i];
      for (Vertex e : family.singles) tc.singles.push_back(t.graph_edge(e));
      for (auto [e, f] : family.pairs) tc.pairs.emplace_back(t.graph_edge(e), t.graph_edge(f));
    }
  });
  result.trees_with_forest = static_cast<std::int32_t>(std::count(with_forest.begin(), with_forest.end(), 1));
  result.verified = verify;
  result.generating_cuts = std::move(cuts);
  result.nontrivial = meet_partitions(parts);

  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    labels[v] = WeightTraits<W>::leq(g.weighted_degree(v), beta) ? std::int64_t{n} + v : result.nontrivial.block_of(v);
  }
  result.with_trivial = Partition::from_labels(labels);
  return result;
}

template <class W>
KtResult<W> kt_partition(const WeightedGraph<W>& g, Ratio epsilon, const PipelineOptions& options) {
  if (epsilon.den <= 0 || epsilon.num < 0 || epsilon.num * 16 > epsilon.den) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in [0, 1/16]");
  }
  return kt_partition_scaled(g, epsilon.one_plus(), options);
}

template <class W>
MinCut<W> min_cut(const WeightedGraph<W>& g, const PipelineOptions& options) {
  require_cut_input(g);
  std::int32_t packed = 0;
  const auto trees = bundle_trees(g, options, packed);
  const auto minima = minima_per_tree(g, trees, options.workers);
  const std::size_t best = best_tree(minima);
  return MinCut<W>{minima[best].overall.weight, shore_in_tree(g, trees[best], minima[best].overall)};
}

ConnectivityResult edge_connectivity_simple(const WeightedGraph<std::int64_t>& g, const PipelineOptions& options,
                                            const ConnectivityConfig& config) {
  require_cut_input(g);
  for (const auto& e : g.edges()) {
    if (e.w != 1) throw Error(ErrorCode::kNotSimple, "edge connectivity expects a simple unweighted graph");
  }
  const Vertex n = g.num_vertices();
  Vertex low = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.weighted_degree(v) < g.weighted_degree(low)) low = v;
  }
  const std::int64_t d_min = g.weighted_degree(low);
  ConnectivityResult out;
  out.value = d_min;
  out.shore.assign(static_cast<std::size_t>(n), 0);
  out.shore[low] = 1;
  // The sparsifier threshold 101/99 stays within 1 + 3/100 of lambda.
  constexpr double kEps = 0.03;
  out.contracted_edge_bound = 68.0 * n / ((1 - kEps) * (1 - kEps));

  double c2 = config.sample_constant;
  const double log_n = std::log(static_cast<double>(n));
  for (std::int32_t attempt = 0; attempt < config.max_attempts; ++attempt) {
    out.attempts = attempt + 1;
    const bool last = attempt + 1 == config.max_attempts;
    const std::int64_t k = last ? 1 : std::max<std::int64_t>(1, static_cast<std::int64_t>(d_min / (c2 * log_n)));
    PipelineOptions inner = options;
    inner.packing.seed = derive_seed(options.packing.seed, 0x636f6e6eULL + static_cast<std::uint64_t>(attempt));

    WeightedGraph<std::int64_t> sparse;
    const WeightedGraph<std::int64_t>* f = &g;
    if (k > 1) {
      Rng rng(inner.packing.seed);
      std::vector<Edge<std::int64_t>> kept;
      for (const auto& e : g.edges()) {
        if (uniform_below(rng, static_cast<std::uint64_t>(k)) == 0) kept.push_back({e.u, e.v, k});
      }
      sparse = WeightedGraph<std::int64_t>::from_edges(n, std::move(kept));
      if (!is_connected(sparse)) {
        c2 *= 2;
        continue;
      }
      f = &sparse;
    }

    const KtResult<std::int64_t> kt = kt_partition_scaled(*f, Ratio{101, 99}, inner);
    const Partition& blocks = kt.nontrivial;
    const WeightedGraph<std::int64_t> contracted = contract(g, blocks.labels(), blocks.num_blocks());
    const std::int64_t multi_edges = contracted.num_edges() == 0 ? 0 : contracted.total_weight();
    const bool too_big = multi_edges > config.abort_factor * n || multi_edges > out.contracted_edge_bound;
    if (too_big && !last) {
      c2 *= 2;
      continue;
    }
    if (too_big) throw Error(ErrorCode::kVerification, "contracted graph exceeds the size bound");
    out.contracted_vertices = contracted.num_vertices();
    out.contracted_edges = multi_edges;
    if (contracted.num_vertices() >= 2) {
      const MinCut<std::int64_t> mc = min_cut(contracted, inner);
      if (mc.weight < d_min) {
        out.value = mc.weight;
        out.source = ConnectivityResult::Source::kContracted;
        for (Vertex v = 0; v < n; ++v) out.shore[v] = mc.shore[blocks.block_of(v)];
      }
    }
    return out;
  }
  throw Error(ErrorCode::kInternal, "edge connectivity: no attempt succeeded");
}

#define KTP_INSTANTIATE(W)                                                                    \
  template KtResult<W> kt_partition<W>(const WeightedGraph<W>&, Ratio, const PipelineOptions&); \
  template KtResult<W> kt_partition_scaled<W>(const WeightedGraph<W>&, Ratio, const PipelineOptions&); \
  template MinCut<W> min_cut<W>(const WeightedGraph<W>&, const PipelineOptions&);

KTP_INSTANTIATE(std::int64_t)
KTP_INSTANTIATE(double)

#undef KTP_INSTANTIATE

}  // namespace ktp
