#include "respecting_cuts.hpp"

#include <algorithm>

namespace ktp {

template <class W>
TreeCutContext<W>::TreeCutContext(const WeightedGraph<W>& g, const TreeIndex& index) : graph_(&g), index_(&index) {
  const RootedTree& t = index.tree;
  const Vertex n = g.num_vertices();
  if (t.size() != n) throw Error(ErrorCode::kInvalidArgument, "tree and graph differ in vertex count");
  const auto m = static_cast<EdgeId>(g.num_edges());
  lca_.resize(static_cast<std::size_t>(m));
  bucket_begin_.assign(static_cast<std::size_t>(n) + 1, 0);
  // Weight of edges whose lca is x, per x; becomes the cost after the
  // subtree sums below.
  cost_.assign(static_cast<std::size_t>(n), W{0});
  for (EdgeId id = 0; id < m; ++id) {
    const Edge<W>& e = g.edge(id);
    Vertex x = index.lca.lca(e.u, e.v);
    lca_[id] = x;
    ++bucket_begin_[x + 1];
    cost_[x] -= 2 * e.w;
  }
  for (Vertex v = 0; v < n; ++v) {
    bucket_begin_[v + 1] += bucket_begin_[v];
    cost_[v] += g.weighted_degree(v);
  }
  bucket_.resize(static_cast<std::size_t>(m));
  std::vector<std::int32_t> fill(bucket_begin_.begin(), bucket_begin_.end() - 1);
  for (EdgeId id = 0; id < m; ++id) bucket_[fill[lca_[id]]++] = id;

  auto order = t.preorder();
  for (std::size_t i = order.size(); i-- > 1;) {
    Vertex v = order[i];
    cost_[t.parent(v)] += cost_[v];
  }
  cost_[t.root()] = W{0};
}

template <class W>
std::vector<W> one_respecting_costs(const WeightedGraph<W>& g, const TreeIndex& index) {
  TreeCutContext<W> ctx(g, index);
  return {ctx.costs().begin(), ctx.costs().end()};
}

PairRelation pair_relation(const RootedTree& tree, Vertex e, Vertex f) {
  if (tree.is_ancestor(e, f) || tree.is_ancestor(f, e)) return PairRelation::kDescendant;
  return PairRelation::kIndependent;
}

bool is_trivial_single(const RootedTree& tree, Vertex e) {
  // Shore {head(e)} for a leaf edge; V minus the root for the root edge.
  return tree.num_children(e) == 0 || tree.parent(e) == tree.root();
}

bool is_trivial_pair(const RootedTree& tree, Vertex e, Vertex f) {
  if (e == f) return true;
  // With a degree-one root an independent pair leaves the root and its
  // child outside the shore, so it is never trivial.
  if (pair_relation(tree, e, f) == PairRelation::kIndependent) return false;
  if (tree.is_ancestor(f, e)) std::swap(e, f);
  return tree.parent(f) == e && tree.num_children(e) == 1;
}

std::vector<char> cut_shore(const RootedTree& tree, Vertex e, Vertex f) {
  std::vector<char> in(static_cast<std::size_t>(tree.size()), 0);
  auto mark = [&](Vertex x, char value) {
    auto order = tree.preorder();
    const std::int32_t b = tree.tin(x);
    for (std::int32_t i = b; i < b + tree.subtree_size(x); ++i) in[order[i]] = value;
  };
  if (f == kNoVertex) {
    mark(e, 1);
  } else if (tree.is_ancestor(e, f)) {
    mark(e, 1);
    mark(f, 0);
  } else if (tree.is_ancestor(f, e)) {
    mark(f, 1);
    mark(e, 0);
  } else {
    mark(e, 1);
    mark(f, 1);
  }
  return in;
}

template <class W>
W pair_cost(const TreeCutContext<W>& ctx, Vertex e, Vertex f) {
  const RootedTree& t = ctx.tree();
  if (e == f) throw Error(ErrorCode::kInvalidArgument, "pair of identical edges");
  W cross{0};
  if (pair_relation(t, e, f) == PairRelation::kDescendant) {
    if (t.is_ancestor(f, e)) std::swap(e, f);
    // edges between f's subtree and everything outside e's subtree
    for (const Edge<W>& ed : ctx.graph().edges()) {
      const bool uf = t.is_ancestor(f, ed.u);
      const bool vf = t.is_ancestor(f, ed.v);
      const bool ue = t.is_ancestor(e, ed.u);
      const bool ve = t.is_ancestor(e, ed.v);
      if ((uf && !ve) || (vf && !ue)) cross += ed.w;
    }
  } else {
    for (const Edge<W>& ed : ctx.graph().edges()) {
      const bool ue = t.is_ancestor(e, ed.u);
      const bool ve = t.is_ancestor(e, ed.v);
      const bool uf = t.is_ancestor(f, ed.u);
      const bool vf = t.is_ancestor(f, ed.v);
      if ((ue && vf) || (uf && ve)) cross += ed.w;
    }
  }
  return ctx.cost(e) + ctx.cost(f) - 2 * cross;
}

namespace {

template <class W>
class Fenwick {
 public:
  explicit Fenwick(std::int32_t n) : tree_(static_cast<std::size_t>(n) + 1, W{0}) {}
  void add(std::int32_t i, W w) {
    for (++i; i < static_cast<std::int32_t>(tree_.size()); i += i & -i) tree_[i] += w;
  }
  // Sum over [0, i].
  W prefix(std::int32_t i) const {
    W s{0};
    for (++i; i > 0; i -= i & -i) s += tree_[i];
    return s;
  }
  W range(std::int32_t lo, std::int32_t hi) const { return prefix(hi) - prefix(lo - 1); }

 private:
  std::vector<W> tree_;
};

}  // namespace

template <class W>
std::vector<W> batch_pair_costs(const TreeCutContext<W>& ctx, std::span<const std::pair<Vertex, Vertex>> pairs) {
  const RootedTree& t = ctx.tree();
  const Vertex n = t.size();
  // Each graph edge {a, b} is the points (tin a, tin b) and (tin b, tin a);
  // R(X x Y) sums point weights in a rectangle of preorder ranges.
  struct Point {
    std::int32_t x;
    std::int32_t y;
    W w;
  };
  std::vector<Point> points;
  points.reserve(2 * ctx.graph().num_edges());
  for (const Edge<W>& e : ctx.graph().edges()) {
    points.push_back({t.tin(e.u), t.tin(e.v), e.w});
    points.push_back({t.tin(e.v), t.tin(e.u), e.w});
  }
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });

  // Every rectangle is split into two prefix queries in x.
  struct Query {
    std::int32_t x;
    std::int32_t ylo;
    std::int32_t yhi;
    std::size_t slot;
    int sign;
  };
  std::vector<Query> queries;
  std::vector<W> rect;
  auto rectangle = [&](std::int32_t xlo, std::int32_t xhi, std::int32_t ylo, std::int32_t yhi) {
    std::size_t slot = rect.size();
    rect.push_back(W{0});
    queries.push_back({xhi, ylo, yhi, slot, +1});
    if (xlo > 0) queries.push_back({xlo - 1, ylo, yhi, slot, -1});
    return slot;
  };
  auto range_of = [&](Vertex x) { return std::pair{t.tin(x), t.tin(x) + t.subtree_size(x) - 1}; };

  struct Plan {
    std::size_t a;
    std::size_t b;
    bool descendant;
  };
  std::vector<Plan> plans;
  plans.reserve(pairs.size());
  for (auto [e, f] : pairs) {
    if (e == f || e == t.root() || f == t.root()) throw Error(ErrorCode::kInvalidArgument, "invalid cut pair");
    if (t.is_ancestor(f, e)) std::swap(e, f);
    auto [elo, ehi] = range_of(e);
    auto [flo, fhi] = range_of(f);
    if (t.is_ancestor(e, f)) {
      plans.push_back({rectangle(flo, fhi, 0, n - 1), rectangle(flo, fhi, elo, ehi), true});
    } else {
      plans.push_back({rectangle(elo, ehi, flo, fhi), 0, false});
    }
  }
  std::sort(queries.begin(), queries.end(), [](const Query& a, const Query& b) { return a.x < b.x; });
  Fenwick<W> fw(n);
  std::size_t pi = 0;
  for (const Query& q : queries) {
    while (pi < points.size() && points[pi].x <= q.x) {
      fw.add(points[pi].y, points[pi].w);
      ++pi;
    }
    W s = fw.range(q.ylo, q.yhi);
    rect[q.slot] += q.sign > 0 ? s : -s;
  }

  std::vector<W> out;
  out.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Plan& p = plans[i];
    const W base = ctx.cost(pairs[i].first) + ctx.cost(pairs[i].second);
    const W cross = p.descendant ? rect[p.a] - rect[p.b] : rect[p.a];
    out.push_back(base - 2 * cross);
  }
  return out;
}

#define KTP_INSTANTIATE(W)                                                                       \
  template class TreeCutContext<W>;                                                              \
  template std::vector<W> one_respecting_costs<W>(const WeightedGraph<W>&, const TreeIndex&);   \
  template W pair_cost<W>(const TreeCutContext<W>&, Vertex, Vertex);                             \
  template std::vector<W> batch_pair_costs<W>(const TreeCutContext<W>&,                          \
                                              std::span<const std::pair<Vertex, Vertex>>);

KTP_INSTANTIATE(std::int64_t)
KTP_INSTANTIATE(double)

#undef KTP_INSTANTIATE

}  // namespace ktp
