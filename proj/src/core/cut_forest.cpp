#include "cut_forest.hpp"

#include <algorithm>
#include <numeric>

namespace ktp {

void PartnerRecord::merge(const PartnerRecord& other) {
  for (std::size_t e = 0; e < partner.size(); ++e) {
    if (partner[e] == kNoVertex) partner[e] = other.partner[e];
  }
}

std::size_t PartnerRecord::count() const {
  return static_cast<std::size_t>(std::count_if(partner.begin(), partner.end(), [](Vertex f) { return f != kNoVertex; }));
}

namespace {

template <class W>
W penalty_for(const TreeCutContext<W>& ctx, W beta) {
  return beta + 1 + 4 * ctx.graph().total_weight();
}

}  // namespace

template <class W>
PartnerRecord descendant_pass(const TreeCutContext<W>& ctx, std::span<const Color> colors, W beta) {
  const RootedTree& t = ctx.tree();
  PartnerRecord rec(t.size());
  if (t.size() < 3) return rec;
  const W penalty = penalty_for(ctx, beta);
  auto unique_child = [&](Vertex e) { return t.num_children(e) == 1 ? t.children(e)[0] : kNoVertex; };
  auto acceptable = [&](Vertex e, const typename TreeScores<W>::EdgeScore& f) {
    return f.valid() && colors[f.edge] != colors[e] && WeightTraits<W>::leq(ctx.cost(e) + f.score, beta);
  };

  TreeScores<W> scores(ctx.index(), ctx.costs(), colors);
  // Partners of e below e.
  descendant_traversal(ctx, scores, [&](Vertex e) {
    const Vertex only = unique_child(e);
    if (only != kNoVertex) scores.add_edge(penalty, only);
    auto top = scores.cat_top_two_subtree(e);
    if (acceptable(e, top.first)) {
      rec.offer(e, top.first.edge);
    } else if (acceptable(e, top.second)) {
      rec.offer(e, top.second.edge);
    }
    if (only != kNoVertex) scores.add_edge(-penalty, only);
  });

  // Edges below e that have e as a partner. Each one found is masked for
  // the rest of the traversal, so the loop runs O(n) times in total.
  scores.reset(ctx.costs(), colors);
  descendant_traversal(ctx, scores, [&](Vertex e) {
    const Vertex only = unique_child(e);
    if (only != kNoVertex) scores.add_edge(penalty, only);
    for (;;) {
      auto top = scores.cat_top_two_subtree(e);
      Vertex f = kNoVertex;
      if (acceptable(e, top.first)) {
        f = top.first.edge;
      } else if (acceptable(e, top.second)) {
        f = top.second.edge;
      }
      if (f == kNoVertex) break;
      rec.offer(f, e);
      scores.add_edge(penalty, f);
    }
    if (only != kNoVertex) scores.add_edge(-penalty, only);
  });
  return rec;
}

template <class W>
PartnerRecord independent_empty_pass(const TreeCutContext<W>& ctx, std::span<const Color> colors, W beta) {
  const RootedTree& t = ctx.tree();
  PartnerRecord rec(t.size());
  if (t.size() < 3) return rec;
  const W penalty = penalty_for(ctx, beta);
  // Six candidates: three rounds of categorical top two, masking each
  // round's picks. For any e, some candidate is a valid partner whenever
  // any edge f with cost(e) + cost(f) <= beta is.
  TreeScores<W> scores(ctx.index(), ctx.costs(), colors);
  std::vector<Vertex> candidates;
  for (int round = 0; round < 3; ++round) {
    auto top = scores.cat_top_two_all();
    for (const auto& c : {top.first, top.second}) {
      if (c.valid() && c.score < penalty) {
        candidates.push_back(c.edge);
        scores.add_edge(penalty, c.edge);
      }
    }
  }
  for (Vertex e : t.edges()) {
    for (Vertex f : candidates) {
      if (f == e || colors[f] == colors[e]) continue;
      if (!WeightTraits<W>::leq(ctx.cost(e) + ctx.cost(f), beta)) continue;
      if (is_trivial_pair(t, e, f)) continue;
      rec.offer(e, f);
      break;
    }
  }
  return rec;
}

template <class W>
PartnerRecord independent_nonempty_pass(const TreeCutContext<W>& ctx, const PairLists<W>& lists,
                                        std::span<const Color> colors, W beta) {
  const HeavyPathDecomposition& hld = ctx.index().hld;
  PartnerRecord rec(ctx.tree().size());
  const W penalty = penalty_for(ctx, beta);
  std::vector<ScoreArray<W>> arrays = path_arrays(ctx, colors);
  std::vector<typename PairLists<W>::Item> scratch;
  std::vector<std::int32_t> found;
  for (std::int32_t h = 0; h < hld.num_paths(); ++h) {
    ScoreArray<W>& rows = arrays[h];
    found.clear();
    for (std::int32_t k = lists.path_group_begin[h]; k < lists.path_group_begin[h + 1]; ++k) {
      const auto& grp = lists.groups[lists.path_groups[k]];
      const bool rows_low = grp.low == h;
      const std::int32_t other = rows_low ? grp.high : grp.low;
      const ScoreArray<W>& cols = arrays[other];
      const std::int32_t row_start = rows_low ? grp.low_start : grp.high_start;
      const std::int32_t col_start = rows_low ? grp.high_start : grp.low_start;
      const std::int32_t row_end = rows.size() - 1;
      sweep_pair(lists, grp, rows_low, rows, row_start, col_start, cols.size(), scratch,
                 [&](std::int32_t lo, std::int32_t hi) {
                   const TopTwo<W> c = cols.cat_top_two(lo, hi);
                   for (;;) {
                     const TopTwo<W> r = rows.cat_top_two(row_start, row_end);
                     std::int32_t hit_row = -1;
                     std::int32_t hit_col = -1;
                     for (const Scored<W>* x : {&r.first, &r.second}) {
                       for (const Scored<W>* y : {&c.first, &c.second}) {
                         if (hit_row < 0 && x->valid() && y->valid() && x->color != y->color &&
                             WeightTraits<W>::leq(x->score + y->score, beta)) {
                           hit_row = x->index;
                           hit_col = y->index;
                         }
                       }
                     }
                     if (hit_row < 0) break;
                     rec.offer(hld.edge_at(hld.path_begin(h) + hit_row), hld.edge_at(hld.path_begin(other) + hit_col));
                     rows.add(penalty, hit_row, hit_row);
                     found.push_back(hit_row);
                   }
                 });
    }
    for (std::int32_t i : found) rows.add(-penalty, i, i);
  }
  return rec;
}

template <class W>
PartnerRecord round_edges(const TreeCutContext<W>& ctx, const PairLists<W>& lists, std::span<const Color> colors,
                          W beta) {
  PartnerRecord rec = descendant_pass(ctx, colors, beta);
  rec.merge(independent_empty_pass(ctx, colors, beta));
  rec.merge(independent_nonempty_pass(ctx, lists, colors, beta));
  return rec;
}

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::int32_t n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

template <class W>
CutForest<W> h_spanning_forest(const TreeCutContext<W>& ctx, const PairLists<W>& lists, W beta) {
  const RootedTree& t = ctx.tree();
  const Vertex n = t.size();
  CutForest<W> out;
  const std::vector<Vertex> tree_edges = t.edges();
  std::vector<Color> colors(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < tree_edges.size(); ++i) colors[tree_edges[i]] = static_cast<Color>(i);
  auto classes = static_cast<std::int32_t>(tree_edges.size());
  std::vector<std::pair<Vertex, Vertex>> pairs;

  while (classes > 1) {
    out.classes_per_round.push_back(classes);
    const PartnerRecord rec = round_edges(ctx, lists, colors, beta);
    // One representative per class: its smallest edge with a partner.
    std::vector<Vertex> chosen(static_cast<std::size_t>(classes), kNoVertex);
    for (Vertex e : tree_edges) {
      if (rec.partner[e] != kNoVertex && chosen[colors[e]] == kNoVertex) chosen[colors[e]] = e;
    }
    UnionFind uf(classes);
    bool added = false;
    for (std::int32_t c = 0; c < classes; ++c) {
      const Vertex e = chosen[c];
      if (e == kNoVertex) continue;
      const Vertex f = rec.partner[e];
      if (uf.unite(static_cast<std::int32_t>(colors[e]), static_cast<std::int32_t>(colors[f]))) {
        pairs.emplace_back(e, f);
        added = true;
      }
    }
    if (!added) break;
    std::vector<std::int32_t> dense(static_cast<std::size_t>(classes), -1);
    std::int32_t next = 0;
    for (std::int32_t c = 0; c < classes; ++c) {
      const std::int32_t r = uf.find(c);
      if (dense[r] < 0) dense[r] = next++;
    }
    for (Vertex e : tree_edges) colors[e] = static_cast<Color>(dense[uf.find(static_cast<std::int32_t>(colors[e]))]);
    classes = next;
  }

  for (auto& [e, f] : pairs) {
    if (t.is_ancestor(f, e)) std::swap(e, f);
  }
  const std::vector<W> weights = batch_pair_costs(ctx, pairs);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!WeightTraits<W>::leq(weights[i], beta)) {
      throw Error(ErrorCode::kVerification, "cut-graph forest edge exceeds the threshold");
    }
    out.edges.push_back(CutId<W>{pairs[i].first, pairs[i].second, weights[i]});
  }
  return out;
}

#define KTP_INSTANTIATE(W)                                                                                          \
  template PartnerRecord descendant_pass<W>(const TreeCutContext<W>&, std::span<const Color>, W);                   \
  template PartnerRecord independent_empty_pass<W>(const TreeCutContext<W>&, std::span<const Color>, W);            \
  template PartnerRecord independent_nonempty_pass<W>(const TreeCutContext<W>&, const PairLists<W>&,                \
                                                      std::span<const Color>, W);                                   \
  template PartnerRecord round_edges<W>(const TreeCutContext<W>&, const PairLists<W>&, std::span<const Color>, W);  \
  template CutForest<W> h_spanning_forest<W>(const TreeCutContext<W>&, const PairLists<W>&, W);

KTP_INSTANTIATE(std::int64_t)
KTP_INSTANTIATE(double)

#undef KTP_INSTANTIATE

}  // namespace ktp
