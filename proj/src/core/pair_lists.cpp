#include "pair_lists.hpp"

#include <algorithm>

namespace ktp {

template <class W>
PairLists<W> build_pair_lists(const TreeCutContext<W>& ctx) {
  const RootedTree& t = ctx.tree();
  const HeavyPathDecomposition& hld = ctx.index().hld;
  const WeightedGraph<W>& g = ctx.graph();

  struct Raw {
    std::int32_t low;
    std::int32_t high;
    std::int32_t low_last;
    std::int32_t high_last;
    W weight;
  };
  std::vector<Raw> raw;
  std::vector<std::pair<std::int32_t, std::int32_t>> side_u;
  std::vector<std::pair<std::int32_t, std::int32_t>> side_v;
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.num_edges()); ++id) {
    const Edge<W>& e = g.edge(id);
    const Vertex x = ctx.edge_lca(id);
    if (x == e.u || x == e.v) continue;
    side_u.clear();
    side_v.clear();
    hld.for_each_path_segment(e.u, x, [&](std::int32_t p, std::int32_t last) { side_u.emplace_back(p, last); });
    hld.for_each_path_segment(e.v, x, [&](std::int32_t p, std::int32_t last) { side_v.emplace_back(p, last); });
    for (auto [pu, lu] : side_u) {
      for (auto [pv, lv] : side_v) {
        if (pu < pv) {
          raw.push_back({pu, pv, lu, lv, e.w});
        } else {
          raw.push_back({pv, pu, lv, lu, e.w});
        }
      }
    }
  }
  // Two stable counting sorts group the triples by (low, high).
  const std::int32_t paths = hld.num_paths();
  std::vector<std::size_t> count(static_cast<std::size_t>(paths) + 1);
  std::vector<Raw> sorted(raw.size());
  auto counting_sort = [&](auto key, const std::vector<Raw>& from, std::vector<Raw>& to) {
    std::fill(count.begin(), count.end(), 0);
    for (const Raw& r : from) ++count[key(r) + 1];
    for (std::int32_t p = 0; p < paths; ++p) count[p + 1] += count[p];
    for (const Raw& r : from) to[count[key(r)]++] = r;
  };
  counting_sort([](const Raw& r) { return r.high; }, raw, sorted);
  counting_sort([](const Raw& r) { return r.low; }, sorted, raw);
  sorted.clear();
  sorted.shrink_to_fit();

  PairLists<W> out;
  out.items.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    typename PairLists<W>::Group grp{};
    grp.low = raw[i].low;
    grp.high = raw[i].high;
    std::size_t j = i;
    while (j < raw.size() && raw[j].low == grp.low && raw[j].high == grp.high) ++j;
    if (j - i > 1) {
      std::sort(raw.begin() + static_cast<std::ptrdiff_t>(i), raw.begin() + static_cast<std::ptrdiff_t>(j),
                [](const Raw& a, const Raw& b) {
                  return a.low_last != b.low_last ? a.low_last < b.low_last : a.high_last < b.high_last;
                });
    }
    grp.begin = out.items.size();
    for (; i < j; ++i) {
      auto& items = out.items;
      if (items.size() > grp.begin && items.back().low_last == raw[i].low_last &&
          items.back().high_last == raw[i].high_last) {
        items.back().weight += raw[i].weight;
      } else {
        items.push_back({raw[i].low_last, raw[i].high_last, raw[i].weight});
      }
    }
    grp.end = out.items.size();
    const Vertex tail_low = hld.path_tail(grp.low);
    const Vertex tail_high = hld.path_tail(grp.high);
    const std::int32_t split = t.depth(ctx.index().lca.lca(tail_low, tail_high));
    grp.low_start = std::max(0, split - t.depth(hld.path_top(grp.low)));
    grp.high_start = std::max(0, split - t.depth(hld.path_top(grp.high)));
    out.groups.push_back(grp);
  }
  raw.clear();
  raw.shrink_to_fit();

  out.path_group_begin.assign(static_cast<std::size_t>(paths) + 1, 0);
  for (const auto& grp : out.groups) {
    ++out.path_group_begin[grp.low + 1];
    ++out.path_group_begin[grp.high + 1];
  }
  for (std::int32_t p = 0; p < paths; ++p) out.path_group_begin[p + 1] += out.path_group_begin[p];
  out.path_groups.resize(2 * out.groups.size());
  std::vector<std::int32_t> fill(out.path_group_begin.begin(), out.path_group_begin.end() - 1);
  for (std::int32_t k = 0; k < static_cast<std::int32_t>(out.groups.size()); ++k) {
    out.path_groups[fill[out.groups[k].low]++] = k;
    out.path_groups[fill[out.groups[k].high]++] = k;
  }
  return out;
}

template <class W>
std::vector<ScoreArray<W>> path_arrays(const TreeCutContext<W>& ctx, std::span<const Color> colors) {
  const HeavyPathDecomposition& hld = ctx.index().hld;
  std::vector<ScoreArray<W>> arrays(static_cast<std::size_t>(hld.num_paths()));
  std::vector<W> s;
  std::vector<Color> c;
  for (std::int32_t p = 0; p < hld.num_paths(); ++p) {
    s.clear();
    c.clear();
    for (std::int32_t k = 0; k < hld.path_length(p); ++k) {
      Vertex e = hld.edge_at(hld.path_begin(p) + k);
      s.push_back(ctx.cost(e));
      c.push_back(colors[e]);
    }
    arrays[p].assign(s, c);
  }
  return arrays;
}

template <class W>
std::vector<MinArray<W>> path_min_arrays(const TreeCutContext<W>& ctx) {
  const HeavyPathDecomposition& hld = ctx.index().hld;
  std::vector<MinArray<W>> arrays(static_cast<std::size_t>(hld.num_paths()));
  std::vector<W> s;
  for (std::int32_t p = 0; p < hld.num_paths(); ++p) {
    s.clear();
    for (std::int32_t k = 0; k < hld.path_length(p); ++k) s.push_back(ctx.cost(hld.edge_at(hld.path_begin(p) + k)));
    arrays[p].assign(s);
  }
  return arrays;
}

template PairLists<std::int64_t> build_pair_lists(const TreeCutContext<std::int64_t>&);
template PairLists<double> build_pair_lists(const TreeCutContext<double>&);
template std::vector<ScoreArray<std::int64_t>> path_arrays(const TreeCutContext<std::int64_t>&, std::span<const Color>);
template std::vector<ScoreArray<double>> path_arrays(const TreeCutContext<double>&, std::span<const Color>);

template std::vector<MinArray<std::int64_t>> path_min_arrays(const TreeCutContext<std::int64_t>&);
template std::vector<MinArray<double>> path_min_arrays(const TreeCutContext<double>&);

}  // namespace ktp
