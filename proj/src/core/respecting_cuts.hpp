#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "tree.hpp"

namespace ktp {

// Costs, LCAs and LCA buckets of one graph against one spanning tree.
template <class W>
class TreeCutContext {
 public:
  TreeCutContext(const WeightedGraph<W>& g, const TreeIndex& index);

  const WeightedGraph<W>& graph() const { return *graph_; }
  const TreeIndex& index() const { return *index_; }
  const RootedTree& tree() const { return index_->tree; }
  // Weight of the 1-respecting cut of each tree edge; root entry is 0.
  std::span<const W> costs() const { return cost_; }
  W cost(Vertex edge) const { return cost_[edge]; }
  Vertex edge_lca(EdgeId e) const { return lca_[e]; }
  std::span<const EdgeId> edges_with_lca(Vertex x) const {
    return {bucket_.data() + bucket_begin_[x], bucket_.data() + bucket_begin_[x + 1]};
  }

 private:
  const WeightedGraph<W>* graph_;
  const TreeIndex* index_;
  std::vector<W> cost_;
  std::vector<Vertex> lca_;
  std::vector<std::int32_t> bucket_begin_;
  std::vector<EdgeId> bucket_;
};

enum class PairRelation { kDescendant, kIndependent };

// Cut respecting a tree: one edge (f == kNoVertex) or two. For descendant
// pairs e is the upper edge.
template <class W>
struct CutId {
  Vertex e = kNoVertex;
  Vertex f = kNoVertex;
  W weight{};
  bool valid() const { return e != kNoVertex; }
  bool is_pair() const { return f != kNoVertex; }
};

// One-respecting costs indexed by tree edge (child vertex).
template <class W>
std::vector<W> one_respecting_costs(const WeightedGraph<W>& g, const TreeIndex& index);

PairRelation pair_relation(const RootedTree& tree, Vertex e, Vertex f);

// True when the cut is trivial: its shore is a single vertex or all but one.
bool is_trivial_single(const RootedTree& tree, Vertex e);
bool is_trivial_pair(const RootedTree& tree, Vertex e, Vertex f);

// Side of the cut not containing the root, as a 0/1 vector.
std::vector<char> cut_shore(const RootedTree& tree, Vertex e, Vertex f = kNoVertex);

// Reference O(m) evaluation of the cut weight of a pair.
template <class W>
W pair_cost(const TreeCutContext<W>& ctx, Vertex e, Vertex f);

// Exact weights of many pairs at once, O((m + q) log n).
template <class W>
std::vector<W> batch_pair_costs(const TreeCutContext<W>& ctx, std::span<const std::pair<Vertex, Vertex>> pairs);

// Minimum cut that 1- or 2-respects the tree. With nontrivial_only, cuts
// whose shore is a single vertex (or all but one) are excluded; the result
// is invalid when no such cut exists.
template <class W>
CutId<W> min_two_respecting_cut(const TreeCutContext<W>& ctx, bool nontrivial_only);

template <class W>
CutId<W> min_two_respecting_cut(const WeightedGraph<W>& g, const TreeIndex& index, bool nontrivial_only) {
  TreeCutContext<W> ctx(g, index);
  return min_two_respecting_cut(ctx, nontrivial_only);
}

// Both minima in one pass over the machinery: over all cuts, and over
// non-trivial cuts that strictly 2-respect the tree.
template <class W>
struct RespectingMinima {
  CutId<W> overall;
  CutId<W> nontrivial_pair;
};

template <class W>
RespectingMinima<W> respecting_minima(const TreeCutContext<W>& ctx);

}  // namespace ktp
