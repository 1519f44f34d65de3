#include <algorithm>
#include <array>

#include "pair_lists.hpp"
#include "respecting_cuts.hpp"

namespace ktp {

namespace {

template <class W>
void consider(CutId<W>& best, Vertex e, Vertex f, W w) {
  if (!best.valid() || w < best.weight) best = CutId<W>{e, f, w};
}

}  // namespace

template <class W>
RespectingMinima<W> respecting_minima(const TreeCutContext<W>& ctx) {
  const RootedTree& t = ctx.tree();
  const HeavyPathDecomposition& hld = ctx.index().hld;
  const Vertex n = t.size();
  RespectingMinima<W> out;
  const std::vector<Vertex> tree_edges = t.edges();
  for (Vertex e : tree_edges) consider(out.overall, e, kNoVertex, ctx.cost(e));
  if (n < 3) return out;

  const W penalty = 4 * ctx.graph().total_weight() + 1;

  // Descendant pairs. The unique child edge of head(e), when there is one,
  // gives the trivial cut {head(e)}; it is scored separately and masked.
  TreeMinScores<W> scores(ctx.index(), ctx.costs());
  descendant_traversal(
      ctx, scores,
      [&](Vertex e) {
        const Vertex only = t.num_children(e) == 1 ? t.children(e)[0] : kNoVertex;
        if (only != kNoVertex) {
          consider(out.overall, e, only, ctx.cost(e) + scores.score(only));
          scores.add_edge(penalty, only);
        }
        const auto best = scores.min_subtree(e);
        if (best.valid() && best.edge != only) {
          const W w = ctx.cost(e) + best.score;
          consider(out.nontrivial_pair, e, best.edge, w);
          consider(out.overall, e, best.edge, w);
        }
        if (only != kNoVertex) scores.add_edge(-penalty, only);
      },
      false);

  // Independent pairs that share graph edges.
  const PairLists<W> lists = build_pair_lists(ctx);
  std::vector<MinArray<W>> arrays = path_min_arrays(ctx);
  std::vector<typename PairLists<W>::Item> scratch;
  for (const auto& grp : lists.groups) {
    MinArray<W>& rows = arrays[grp.low];
    MinArray<W>& cols = arrays[grp.high];
    const std::int32_t row_end = rows.size() - 1;
    sweep_pair(lists, grp, true, rows, grp.low_start, grp.high_start, cols.size(), scratch,
               [&](std::int32_t lo, std::int32_t hi) {
                 const auto r = rows.min(grp.low_start, row_end);
                 const auto c = cols.min(lo, hi);
                 const Vertex e = hld.edge_at(hld.path_begin(grp.low) + r.index);
                 const Vertex f = hld.edge_at(hld.path_begin(grp.high) + c.index);
                 consider(out.nontrivial_pair, e, f, r.score + c.score);
                 consider(out.overall, e, f, r.score + c.score);
               });
  }

  // Independent pairs without shared edges weigh cost(e) + cost(f), which
  // is at least the exact weight of the non-trivial pair minimizing that
  // sum. Three cheapest edges suffice: at most e itself and one trivial
  // partner are excluded.
  std::vector<Vertex> cheap = tree_edges;
  const std::size_t k = std::min<std::size_t>(3, cheap.size());
  std::partial_sort(cheap.begin(), cheap.begin() + static_cast<std::ptrdiff_t>(k), cheap.end(),
                    [&](Vertex a, Vertex b) { return ctx.cost(a) != ctx.cost(b) ? ctx.cost(a) < ctx.cost(b) : a < b; });
  Vertex be = kNoVertex;
  Vertex bf = kNoVertex;
  W best_sum{};
  for (Vertex e : tree_edges) {
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex f = cheap[i];
      if (f == e || is_trivial_pair(t, e, f)) continue;
      const W s = ctx.cost(e) + ctx.cost(f);
      if (be == kNoVertex || s < best_sum) {
        be = e;
        bf = f;
        best_sum = s;
      }
      break;
    }
  }
  if (be != kNoVertex && (!out.nontrivial_pair.valid() || best_sum < out.nontrivial_pair.weight)) {
    if (t.is_ancestor(bf, be)) std::swap(be, bf);
    consider(out.nontrivial_pair, be, bf, pair_cost(ctx, be, bf));
  }
  return out;
}

template <class W>
CutId<W> min_two_respecting_cut(const TreeCutContext<W>& ctx, bool nontrivial_only) {
  RespectingMinima<W> m = respecting_minima(ctx);
  if (!nontrivial_only) return m.overall;
  CutId<W> best = m.nontrivial_pair;
  for (Vertex e : ctx.tree().edges()) {
    if (!is_trivial_single(ctx.tree(), e)) consider(best, e, kNoVertex, ctx.cost(e));
  }
  return best;
}

template RespectingMinima<std::int64_t> respecting_minima(const TreeCutContext<std::int64_t>&);
template RespectingMinima<double> respecting_minima(const TreeCutContext<double>&);
template CutId<std::int64_t> min_two_respecting_cut(const TreeCutContext<std::int64_t>&, bool);
template CutId<double> min_two_respecting_cut(const TreeCutContext<double>&, bool);

}  // namespace ktp
