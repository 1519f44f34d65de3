#include "score_array.hpp"

#include <string>

namespace ktp {

namespace {

template <class W>
bool better(const Scored<W>& a, const Scored<W>& b) {
  if (!b.valid()) return a.valid();
  if (!a.valid()) return false;
  if (a.score != b.score) return a.score < b.score;
  return a.index < b.index;
}

}  // namespace

template <class W>
TopTwo<W> merge_top_two(const TopTwo<W>& a, const TopTwo<W>& b) {
  TopTwo<W> out;
  out.first = better(a.first, b.first) ? a.first : b.first;
  for (const Scored<W>* c : {&a.first, &a.second, &b.first, &b.second}) {
    if (c->valid() && c->color != out.first.color && better(*c, out.second)) out.second = *c;
  }
  return out;
}

template <class W>
ScoreArray<W>::ScoreArray(std::span<const W> scores, std::span<const Color> colors) {
  assign(scores, colors);
}

template <class W>
void ScoreArray<W>::assign(std::span<const W> scores, std::span<const Color> colors) {
  if (scores.size() != colors.size()) throw Error(ErrorCode::kInvalidArgument, "scores and colors differ in length");
  n_ = static_cast<std::int32_t>(scores.size());
  leaves_ = 1;
  while (leaves_ < n_) leaves_ *= 2;
  nodes_.assign(2 * static_cast<std::size_t>(leaves_), Node{});
  colors_.assign(colors.begin(), colors.end());
  for (std::int32_t i = 0; i < leaves_; ++i) {
    Node& leaf = nodes_[leaves_ + i];
    if (i < n_) {
      if (colors[i] == kPaddingColor) throw Error(ErrorCode::kInvalidArgument, "reserved color");
      leaf.update = scores[i];
      leaf.first = Scored<W>{scores[i], i, colors[i]};
    } else {
      leaf.update = WeightTraits<W>::kInfinity;
      leaf.first = Scored<W>{WeightTraits<W>::kInfinity, i, kPaddingColor};
    }
  }
  for (std::size_t node = leaves_; node-- > 1;) pull(node);
}

template <class W>
void ScoreArray<W>::pull(std::size_t node) {
  const Node& l = nodes_[2 * node];
  const Node& r = nodes_[2 * node + 1];
  TopTwo<W> merged = merge_top_two(TopTwo<W>{l.first, l.second}, TopTwo<W>{r.first, r.second});
  Node& x = nodes_[node];
  x.first = merged.first;
  x.second = merged.second;
  x.first.score += x.update;
  if (x.second.valid()) x.second.score += x.update;
}

template <class W>
void ScoreArray<W>::apply(std::size_t node, W delta) {
  Node& x = nodes_[node];
  x.update += delta;
  x.first.score += delta;
  if (x.second.valid()) x.second.score += delta;
}

template <class W>
void ScoreArray<W>::check_range(std::int32_t lo, std::int32_t hi) const {
  if (lo < 0 || hi >= n_ || lo > hi) {
    throw Error(ErrorCode::kInvalidArgument,
                "range [" + std::to_string(lo) + ", " + std::to_string(hi) + "] outside array of size " + std::to_string(n_));
  }
}

template <class W>
void ScoreArray<W>::add(W delta, std::int32_t lo, std::int32_t hi) {
  check_range(lo, hi);
  add_rec(1, 0, leaves_ - 1, lo, hi, delta);
}

template <class W>
void ScoreArray<W>::add_rec(std::size_t node, std::int32_t nl, std::int32_t nr, std::int32_t lo, std::int32_t hi,
                            W delta) {
  ++touches_;
  if (lo <= nl && nr <= hi) {
    apply(node, delta);
    return;
  }
  const std::int32_t mid = nl + (nr - nl) / 2;
  if (lo <= mid) add_rec(2 * node, nl, mid, lo, hi, delta);
  if (hi > mid) add_rec(2 * node + 1, mid + 1, nr, lo, hi, delta);
  pull(node);
}

template <class W>
TopTwo<W> ScoreArray<W>::cat_top_two(std::int32_t lo, std::int32_t hi) const {
  check_range(lo, hi);
  TopTwo<W> acc;
  query_rec(1, 0, leaves_ - 1, lo, hi, W{0}, acc);
  return acc;
}

template <class W>
void ScoreArray<W>::query_rec(std::size_t node, std::int32_t nl, std::int32_t nr, std::int32_t lo, std::int32_t hi,
                              W offset, TopTwo<W>& acc) const {
  ++touches_;
  const Node& x = nodes_[node];
  if (lo <= nl && nr <= hi) {
    TopTwo<W> here{x.first, x.second};
    here.first.score += offset;
    if (here.second.valid()) here.second.score += offset;
    acc = merge_top_two(acc, here);
    return;
  }
  offset += x.update;
  const std::int32_t mid = nl + (nr - nl) / 2;
  if (lo <= mid) query_rec(2 * node, nl, mid, lo, hi, offset, acc);
  if (hi > mid) query_rec(2 * node + 1, mid + 1, nr, lo, hi, offset, acc);
}

template <class W>
W ScoreArray<W>::score(std::int32_t i) const {
  check_range(i, i);
  W s{0};
  for (std::size_t node = static_cast<std::size_t>(leaves_) + i; node >= 1; node /= 2) {
    ++touches_;
    s += nodes_[node].update;
  }
  return s;
}

template <class W>
TreeScores<W>::TreeScores(const TreeIndex& index, std::span<const W> scores, std::span<const Color> colors)
    : index_(&index) {
  reset(scores, colors);
}

template <class W>
void TreeScores<W>::reset(std::span<const W> scores, std::span<const Color> colors) {
  const HeavyPathDecomposition& hld = index_->hld;
  const std::int32_t m = hld.num_positions();
  scratch_scores_.resize(static_cast<std::size_t>(m));
  scratch_colors_.resize(static_cast<std::size_t>(m));
  for (std::int32_t p = 0; p < m; ++p) {
    Vertex e = hld.edge_at(p);
    scratch_scores_[p] = scores[e];
    scratch_colors_[p] = colors[e];
  }
  array_.assign(scratch_scores_, scratch_colors_);
}

template <class W>
void TreeScores<W>::add_path(W delta, Vertex u, Vertex v, Vertex lca) {
  index_->hld.for_each_path_interval(u, v, lca, [&](Interval iv) { array_.add(delta, iv.lo, iv.hi); });
}

template <class W>
void TreeScores<W>::add_edge(W delta, Vertex edge) {
  const std::int32_t p = index_->hld.position(edge);
  array_.add(delta, p, p);
}

template <class W>
W TreeScores<W>::score(Vertex edge) const {
  return array_.score(index_->hld.position(edge));
}

template <class W>
typename TreeScores<W>::EdgeTopTwo TreeScores<W>::to_edges(const TopTwo<W>& t) const {
  EdgeTopTwo out;
  if (t.first.valid()) out.first = EdgeScore{index_->hld.edge_at(t.first.index), t.first.score};
  if (t.second.valid()) out.second = EdgeScore{index_->hld.edge_at(t.second.index), t.second.score};
  return out;
}

template <class W>
typename TreeScores<W>::EdgeTopTwo TreeScores<W>::cat_top_two_subtree(Vertex edge) const {
  Interval range;
  if (!index_->hld.subtree_range(edge, range)) return EdgeTopTwo{};
  return to_edges(array_.cat_top_two(range.lo, range.hi));
}

template <class W>
typename TreeScores<W>::EdgeTopTwo TreeScores<W>::cat_top_two_all() const {
  if (array_.size() == 0) return EdgeTopTwo{};
  return to_edges(array_.cat_top_two(0, array_.size() - 1));
}

template <class W>
void MinArray<W>::assign(std::span<const W> scores) {
  n_ = static_cast<std::int32_t>(scores.size());
  leaves_ = 1;
  height_ = 0;
  while (leaves_ < n_) {
    leaves_ *= 2;
    ++height_;
  }
  value_.assign(2 * static_cast<std::size_t>(leaves_), WeightTraits<W>::kInfinity);
  arg_.assign(2 * static_cast<std::size_t>(leaves_), -1);
  pending_.assign(static_cast<std::size_t>(leaves_), W{0});
  for (std::int32_t i = 0; i < leaves_; ++i) {
    if (i < n_) value_[leaves_ + i] = scores[i];
    arg_[leaves_ + i] = i;
  }
  for (std::size_t x = leaves_; x-- > 1;) {
    const std::size_t c = value_[2 * x] <= value_[2 * x + 1] ? 2 * x : 2 * x + 1;
    value_[x] = value_[c];
    arg_[x] = arg_[c];
  }
}

template <class W>
void MinArray<W>::apply(std::size_t node, W delta) {
  value_[node] += delta;
  if (node < static_cast<std::size_t>(leaves_)) pending_[node] += delta;
}

template <class W>
void MinArray<W>::rebuild(std::size_t node) {
  for (node >>= 1; node >= 1; node >>= 1) {
    const std::size_t c = value_[2 * node] <= value_[2 * node + 1] ? 2 * node : 2 * node + 1;
    value_[node] = value_[c] + pending_[node];
    arg_[node] = arg_[c];
  }
}

template <class W>
void MinArray<W>::push(std::size_t leaf) {
  for (int s = height_; s > 0; --s) {
    const std::size_t x = leaf >> s;
    if (pending_[x] != W{0}) {
      apply(2 * x, pending_[x]);
      apply(2 * x + 1, pending_[x]);
      pending_[x] = W{0};
    }
  }
}

template <class W>
void MinArray<W>::add(W delta, std::int32_t lo, std::int32_t hi) {
  if (lo < 0 || hi >= n_ || lo > hi) throw Error(ErrorCode::kInvalidArgument, "range outside array");
  const std::size_t l0 = static_cast<std::size_t>(leaves_) + lo;
  const std::size_t r0 = static_cast<std::size_t>(leaves_) + hi;
  for (std::size_t l = l0, r = r0 + 1; l < r; l >>= 1, r >>= 1) {
    if (l & 1) apply(l++, delta);
    if (r & 1) apply(--r, delta);
  }
  rebuild(l0);
  rebuild(r0);
}

template <class W>
typename MinArray<W>::Min MinArray<W>::min(std::int32_t lo, std::int32_t hi) {
  if (lo < 0 || hi >= n_ || lo > hi) throw Error(ErrorCode::kInvalidArgument, "range outside array");
  std::size_t l = static_cast<std::size_t>(leaves_) + lo;
  std::size_t r = static_cast<std::size_t>(leaves_) + hi + 1;
  push(l);
  push(r - 1);
  Min best;
  auto take = [&](std::size_t x) {
    if (!best.valid() || value_[x] < best.score || (value_[x] == best.score && arg_[x] < best.index)) {
      best = Min{value_[x], arg_[x]};
    }
  };
  for (; l < r; l >>= 1, r >>= 1) {
    if (l & 1) take(l++);
    if (r & 1) take(--r);
  }
  return best;
}

template <class W>
W MinArray<W>::score(std::int32_t i) const {
  if (i < 0 || i >= n_) throw Error(ErrorCode::kInvalidArgument, "index outside array");
  std::size_t x = static_cast<std::size_t>(leaves_) + i;
  W s = value_[x];
  for (x >>= 1; x >= 1; x >>= 1) s += pending_[x];
  return s;
}

template <class W>
TreeMinScores<W>::TreeMinScores(const TreeIndex& index, std::span<const W> scores) : index_(&index) {
  const HeavyPathDecomposition& hld = index.hld;
  std::vector<W> by_position(static_cast<std::size_t>(hld.num_positions()));
  for (std::int32_t p = 0; p < hld.num_positions(); ++p) by_position[p] = scores[hld.edge_at(p)];
  array_.assign(by_position);
}

template <class W>
void TreeMinScores<W>::add_path(W delta, Vertex u, Vertex v, Vertex lca) {
  index_->hld.for_each_path_interval(u, v, lca, [&](Interval iv) { array_.add(delta, iv.lo, iv.hi); });
}

template <class W>
void TreeMinScores<W>::add_edge(W delta, Vertex edge) {
  const std::int32_t p = index_->hld.position(edge);
  array_.add(delta, p, p);
}

template <class W>
W TreeMinScores<W>::score(Vertex edge) const {
  return array_.score(index_->hld.position(edge));
}

template <class W>
typename TreeMinScores<W>::EdgeScore TreeMinScores<W>::min_subtree(Vertex edge) {
  Interval range;
  if (!index_->hld.subtree_range(edge, range)) return EdgeScore{};
  const auto m = array_.min(range.lo, range.hi);
  return EdgeScore{index_->hld.edge_at(m.index), m.score};
}

template TopTwo<std::int64_t> merge_top_two(const TopTwo<std::int64_t>&, const TopTwo<std::int64_t>&);
template TopTwo<double> merge_top_two(const TopTwo<double>&, const TopTwo<double>&);
template class ScoreArray<std::int64_t>;
template class ScoreArray<double>;
template class TreeScores<std::int64_t>;
template class TreeScores<double>;
template class MinArray<std::int64_t>;
template class MinArray<double>;
template class TreeMinScores<std::int64_t>;
template class TreeMinScores<double>;

}  // namespace ktp
