#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "common.hpp"
#include "tree.hpp"

namespace ktp {

using Color = std::uint32_t;

// Color given to padding leaves; never equal to a caller's color.
inline constexpr Color kPaddingColor = 0xffffffffu;

template <class W>
struct Scored {
  W score{};
  std::int32_t index = -1;
  Color color = kPaddingColor;
  bool valid() const { return index >= 0; }
};

// Minimum-score element, and the minimum among elements of a different
// color. Ties go to the smaller index.
template <class W>
struct TopTwo {
  Scored<W> first;
  Scored<W> second;
};

// Array of scored, colored elements with range add and categorical top-two
// range queries, both O(log n). Backed by a complete binary tree padded to
// a power of two with +infinity sentinels. Indices are 0-based and ranges
// closed.
template <class W>
class ScoreArray {
 public:
  ScoreArray() = default;
  ScoreArray(std::span<const W> scores, std::span<const Color> colors);

  // Rebuilds in O(n).
  void assign(std::span<const W> scores, std::span<const Color> colors);

  std::int32_t size() const { return n_; }
  void add(W delta, std::int32_t lo, std::int32_t hi);
  TopTwo<W> cat_top_two(std::int32_t lo, std::int32_t hi) const;
  W score(std::int32_t i) const;
  Color color(std::int32_t i) const { return colors_[i]; }

  // Number of tree nodes visited so far; used by complexity checks.
  std::uint64_t node_touches() const { return touches_; }
  void reset_node_touches() { touches_ = 0; }

 private:
  struct Node {
    W update{};
    Scored<W> first;
    Scored<W> second;
  };

  void pull(std::size_t node);
  void apply(std::size_t node, W delta);
  void add_rec(std::size_t node, std::int32_t nl, std::int32_t nr, std::int32_t lo, std::int32_t hi, W delta);
  void query_rec(std::size_t node, std::int32_t nl, std::int32_t nr, std::int32_t lo, std::int32_t hi, W offset,
                 TopTwo<W>& acc) const;
  void check_range(std::int32_t lo, std::int32_t hi) const;

  std::int32_t n_ = 0;
  std::int32_t leaves_ = 0;
  std::vector<Node> nodes_;
  std::vector<Color> colors_;
  mutable std::uint64_t touches_ = 0;
};

// Merges candidate lists; exposed for tests.
template <class W>
TopTwo<W> merge_top_two(const TopTwo<W>& a, const TopTwo<W>& b);

// Range add and range minimum (with the smallest index among ties), for
// passes that need no colors. Pending adds live on internal nodes and are
// pushed down only along the two boundary paths of a query.
template <class W>
class MinArray {
 public:
  struct Min {
    W score{};
    std::int32_t index = -1;
    bool valid() const { return index >= 0; }
  };

  MinArray() = default;
  explicit MinArray(std::span<const W> scores) { assign(scores); }
  void assign(std::span<const W> scores);
  std::int32_t size() const { return n_; }
  void add(W delta, std::int32_t lo, std::int32_t hi);
  Min min(std::int32_t lo, std::int32_t hi);
  W score(std::int32_t i) const;

 private:
  void apply(std::size_t node, W delta);
  void rebuild(std::size_t node);
  void push(std::size_t leaf);

  std::int32_t n_ = 0;
  std::int32_t leaves_ = 0;
  int height_ = 0;
  std::vector<W> value_;
  std::vector<std::int32_t> arg_;
  std::vector<W> pending_;
};

// Scores on tree edges, laid out in heavy-path order so that subtrees and
// tree paths are few contiguous ranges.
template <class W>
class TreeScores {
 public:
  struct EdgeScore {
    Vertex edge = kNoVertex;
    W score{};
    bool valid() const { return edge != kNoVertex; }
  };
  struct EdgeTopTwo {
    EdgeScore first;
    EdgeScore second;
  };

  // `scores` and `colors` are indexed by tree edge (child vertex).
  TreeScores(const TreeIndex& index, std::span<const W> scores, std::span<const Color> colors);
  void reset(std::span<const W> scores, std::span<const Color> colors);

  void add_path(W delta, Vertex u, Vertex v, Vertex lca);
  void add_path(W delta, Vertex u, Vertex v) { add_path(delta, u, v, index_->lca.lca(u, v)); }
  void add_edge(W delta, Vertex edge);
  W score(Vertex edge) const;
  // Categorical top two over edges strictly below `edge`.
  EdgeTopTwo cat_top_two_subtree(Vertex edge) const;
  // Categorical top two over all tree edges.
  EdgeTopTwo cat_top_two_all() const;

  const ScoreArray<W>& array() const { return array_; }

 private:
  EdgeTopTwo to_edges(const TopTwo<W>& t) const;

  const TreeIndex* index_;
  ScoreArray<W> array_;
  std::vector<W> scratch_scores_;
  std::vector<Color> scratch_colors_;
};

// Minimum-only counterpart of TreeScores.
template <class W>
class TreeMinScores {
 public:
  using EdgeScore = typename TreeScores<W>::EdgeScore;

  TreeMinScores(const TreeIndex& index, std::span<const W> scores);
  void add_path(W delta, Vertex u, Vertex v, Vertex lca);
  void add_edge(W delta, Vertex edge);
  W score(Vertex edge) const;
  // Minimum over edges strictly below `edge`.
  EdgeScore min_subtree(Vertex edge);

 private:
  const TreeIndex* index_;
  MinArray<W> array_;
};

}  // namespace ktp
