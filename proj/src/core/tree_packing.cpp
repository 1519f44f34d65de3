#include "tree_packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ktp {

namespace {

class UnionFind {
 public:
  explicit UnionFind(Vertex n) : parent_(static_cast<std::size_t>(n)) { reset(); }
  void reset() { std::iota(parent_.begin(), parent_.end(), 0); }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

// Greedy packing: each step takes a minimum spanning forest under the key
// (load + 1) / capacity and adds one to the load of its edges. The edge
// order is kept sorted incrementally since only forest edges change key.
class GreedyPacker {
 public:
  struct Arc {
    Vertex u;
    Vertex v;
    EdgeId id;
    double capacity;
  };

  GreedyPacker(Vertex n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)), load_(arcs_.size(), 0), uf_(n) {
    order_.resize(arcs_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](std::int32_t a, std::int32_t b) { return before(a, b); });
  }

  // Graph edge ids of the next forest.
  std::vector<EdgeId> next() {
    uf_.reset();
    std::vector<std::int32_t> picked;
    std::vector<char> in(arcs_.size(), 0);
    for (std::int32_t a : order_) {
      if (uf_.unite(arcs_[a].u, arcs_[a].v)) {
        picked.push_back(a);
        in[a] = 1;
        if (static_cast<Vertex>(picked.size()) == n_ - 1) break;
      }
    }
    for (std::int32_t a : picked) ++load_[a];
    std::vector<std::int32_t> rest;
    rest.reserve(order_.size());
    for (std::int32_t a : order_) {
      if (!in[a]) rest.push_back(a);
    }
    std::sort(picked.begin(), picked.end(), [&](std::int32_t a, std::int32_t b) { return before(a, b); });
    order_.clear();
    std::merge(rest.begin(), rest.end(), picked.begin(), picked.end(), std::back_inserter(order_),
               [&](std::int32_t a, std::int32_t b) { return before(a, b); });
    std::vector<EdgeId> ids;
    ids.reserve(picked.size());
    for (std::int32_t a : picked) ids.push_back(arcs_[a].id);
    return ids;
  }

  // Largest load / capacity over all arcs.
  double max_relative_load() const {
    double worst = 0;
    for (std::size_t a = 0; a < arcs_.size(); ++a) worst = std::max(worst, load_[a] / arcs_[a].capacity);
    return worst;
  }

 private:
  double key(std::int32_t a) const { return (load_[a] + 1) / arcs_[a].capacity; }
  bool before(std::int32_t a, std::int32_t b) const {
    const double ka = key(a);
    const double kb = key(b);
    return ka != kb ? ka < kb : a < b;
  }

  Vertex n_;
  std::vector<Arc> arcs_;
  std::vector<double> load_;
  std::vector<std::int32_t> order_;
  UnionFind uf_;
};

// Extends a forest of g to a spanning tree using heaviest edges first.
template <class W>
std::vector<EdgeId> complete_tree(const WeightedGraph<W>& g, const std::vector<EdgeId>& forest,
                                  const std::vector<EdgeId>& by_weight) {
  const Vertex n = g.num_vertices();
  UnionFind uf(n);
  std::vector<EdgeId> tree = forest;
  for (EdgeId id : forest) uf.unite(g.edge(id).u, g.edge(id).v);
  for (EdgeId id : by_weight) {
    if (static_cast<Vertex>(tree.size()) == n - 1) break;
    if (uf.unite(g.edge(id).u, g.edge(id).v)) tree.push_back(id);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace

std::int32_t bundle_size(Vertex n, double tree_multiplier) {
  const double k = std::ceil(tree_multiplier * std::max(1, ceil_log2(n)));
  return std::max<std::int32_t>(1, static_cast<std::int32_t>(k));
}

template <class W>
TreeBundle pack_trees(const WeightedGraph<W>& g, const PackingConfig& config) {
  require_cut_input(g);
  if (!(config.tree_multiplier > 0) || !(config.oversampling > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "packing constants must be positive");
  }
  const Vertex n = g.num_vertices();
  const auto m = static_cast<EdgeId>(g.num_edges());
  Rng rng(derive_seed(config.seed, 0x7061636bULL));
  TreeBundle bundle;
  const std::int32_t k = bundle_size(n, config.tree_multiplier);
  const std::int32_t log_n = std::max(1, ceil_log2(n));

  // Lower estimate of lambda: value of a short greedy packing on g.
  std::vector<GreedyPacker::Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(m));
  for (EdgeId id = 0; id < m; ++id) arcs.push_back({g.edge(id).u, g.edge(id).v, id, static_cast<double>(g.edge(id).w)});
  {
    GreedyPacker estimate(n, arcs);
    const std::int32_t rounds = log_n + 1;
    for (std::int32_t i = 0; i < rounds; ++i) estimate.next();
    bundle.lambda_estimate = rounds / estimate.max_relative_load();
  }

  // Skeleton: capacity floor(w s) plus a Bernoulli draw of the fraction.
  bundle.sampling_rate = config.oversampling * std::log(static_cast<double>(n)) / bundle.lambda_estimate;
  std::vector<GreedyPacker::Arc> skeleton;
  skeleton.reserve(static_cast<std::size_t>(m));
  for (const auto& a : arcs) {
    const double x = a.capacity * bundle.sampling_rate;
    double c = std::floor(x);
    if (uniform_unit(rng) < x - c) c += 1;
    if (c > 0) skeleton.push_back({a.u, a.v, a.id, c});
  }

  std::vector<EdgeId> by_weight(static_cast<std::size_t>(m));
  std::iota(by_weight.begin(), by_weight.end(), 0);
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](EdgeId a, EdgeId b) { return g.edge(a).w > g.edge(b).w; });

  const std::int32_t iterations = std::max(k, log_n * log_n);
  bundle.packing_iterations = iterations;
  // All packed trees carry equal weight: draw k of them without replacement.
  std::vector<std::int32_t> pick(static_cast<std::size_t>(iterations));
  std::iota(pick.begin(), pick.end(), 0);
  for (std::int32_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::int32_t>(uniform_below(rng, static_cast<std::uint64_t>(iterations - i)));
    std::swap(pick[i], pick[j]);
  }
  pick.resize(static_cast<std::size_t>(k));
  std::sort(pick.begin(), pick.end());

  GreedyPacker packer(n, std::move(skeleton));
  std::size_t next_pick = 0;
  for (std::int32_t i = 0; i < iterations && next_pick < pick.size(); ++i) {
    std::vector<EdgeId> forest = packer.next();
    if (pick[next_pick] == i) {
      bundle.trees.push_back(complete_tree(g, forest, by_weight));
      ++next_pick;
    }
  }
  return bundle;
}

template TreeBundle pack_trees<std::int64_t>(const WeightedGraph<std::int64_t>&, const PackingConfig&);
template TreeBundle pack_trees<double>(const WeightedGraph<double>&, const PackingConfig&);

}  // namespace ktp
