#pragma once

#include <cstdint>
#include <vector>

#include "respecting_cuts.hpp"
#include "score_array.hpp"

namespace ktp {

// For every pair of heavy paths (h, h') the graph edges that connect an
// edge subtree of h with an edge subtree of h'. Paths of a group are
// ordered low < high; an item says that the weight w is subtracted from
// all independent cells (i, j) with i <= low_last and j <= high_last.
template <class W>
struct PairLists {
  struct Item {
    std::int32_t low_last;
    std::int32_t high_last;
    W weight;
  };
  struct Group {
    std::int32_t low;
    std::int32_t high;
    // First index of each path whose edges are independent of the other path.
    std::int32_t low_start;
    std::int32_t high_start;
    std::size_t begin;
    std::size_t end;
  };

  std::vector<Item> items;
  std::vector<Group> groups;
  // Groups involving each path, CSR by path id.
  std::vector<std::int32_t> path_group_begin;
  std::vector<std::int32_t> path_groups;

  std::size_t num_items() const { return items.size(); }
};

template <class W>
PairLists<W> build_pair_lists(const TreeCutContext<W>& ctx);

// Walks the tree depth first. When `visit(e)` runs, every tree edge f below
// e scores cost(f) - 2 w(f_down, outside e_down), so cost(e) + score(f) is
// the weight of the cut {e, f}. Without `restore`, scores inside finished
// subtrees are left shifted; later visits never look at them.
template <class W, class Scores, class Visit>
void descendant_traversal(const TreeCutContext<W>& ctx, Scores& scores, Visit&& visit, bool restore = true) {
  const RootedTree& t = ctx.tree();
  const WeightedGraph<W>& g = ctx.graph();
  auto shift = [&](Vertex x, W sign) {
    for (EdgeId id : ctx.edges_with_lca(x)) {
      const Edge<W>& e = g.edge(id);
      scores.add_path(sign * (-2) * e.w, e.u, e.v, x);
    }
  };
  std::vector<std::pair<Vertex, std::int32_t>> stack{{t.root(), 0}};
  shift(t.root(), W{1});
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < t.num_children(x)) {
      Vertex y = t.children(x)[i++];
      visit(y);
      stack.emplace_back(y, 0);
      shift(y, W{1});
    } else {
      if (restore) shift(x, W{-1});
      stack.pop_back();
    }
  }
}

// Per-path score arrays for the independent sweep.
template <class W>
std::vector<ScoreArray<W>> path_arrays(const TreeCutContext<W>& ctx, std::span<const Color> colors);
template <class W>
std::vector<MinArray<W>> path_min_arrays(const TreeCutContext<W>& ctx);

// Runs the column sweep of one ordered path pair. Rows are edges of
// `rows` (array `a`), columns edges of the other path (array `b`). For each
// column interval, `query(lo, hi)` is called with the row array updated so
// that a[i] + cost(f_j) is the weight of the cut {e_i, f_j} for every
// column j in [lo, hi] and row i >= row_start.
template <class W, class Array, class Query>
void sweep_pair(const PairLists<W>& lists, const typename PairLists<W>::Group& group, bool rows_are_low, Array& a, std::int32_t row_start, std::int32_t col_start, std::int32_t col_len,
                std::vector<typename PairLists<W>::Item>& scratch, Query&& query) {
  using Item = typename PairLists<W>::Item;
  scratch.clear();
  for (std::size_t k = group.begin; k < group.end; ++k) {
    const Item& it = lists.items[k];
    scratch.push_back(rows_are_low ? it : Item{it.high_last, it.low_last, it.weight});
  }
  std::sort(scratch.begin(), scratch.end(), [](const Item& x, const Item& y) { return x.high_last > y.high_last; });
  // Columns above every item see no updates.
  if (scratch.front().high_last < col_len - 1) query(scratch.front().high_last + 1, col_len - 1);
  std::size_t k = 0;
  while (k < scratch.size()) {
    const std::int32_t j = scratch[k].high_last;
    while (k < scratch.size() && scratch[k].high_last == j) {
      a.add(-2 * scratch[k].weight, row_start, scratch[k].low_last);
      ++k;
    }
    const std::int32_t next = k < scratch.size() ? scratch[k].high_last : col_start - 1;
    query(next + 1, j);
  }
  for (const Item& it : scratch) a.add(2 * it.weight, row_start, it.low_last);
}

}  // namespace ktp
