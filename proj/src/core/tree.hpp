#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "common.hpp"
#include "graph.hpp"

namespace ktp {

// Spanning tree rooted at a leaf. A tree edge is named by its child
// (lower) endpoint, so tree edges are exactly the non-root vertices.
class RootedTree {
 public:
  RootedTree() = default;

  // `edges` are (u, v) pairs; `graph_edge` (optional, same length) records
  // which graph edge each came from. Throws unless the edges form a
  // spanning tree of [0, n). The root is the smallest-id leaf.
  static RootedTree build(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::span<const EdgeId> graph_edge = {});

  template <class W>
  static RootedTree from_graph_edges(const WeightedGraph<W>& g, std::span<const EdgeId> tree_edges);

  Vertex size() const { return static_cast<Vertex>(parent_.size()); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  EdgeId graph_edge(Vertex child) const { return graph_edge_[child]; }
  std::int32_t depth(Vertex v) const { return depth_[v]; }
  std::int32_t subtree_size(Vertex v) const { return size_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {child_list_.data() + child_begin_[v], child_list_.data() + child_begin_[v + 1]};
  }
  std::int32_t num_children(Vertex v) const { return child_begin_[v + 1] - child_begin_[v]; }
  std::span<const Vertex> preorder() const { return preorder_; }
  std::int32_t tin(Vertex v) const { return tin_[v]; }
  // a is an ancestor of b, or a == b.
  bool is_ancestor(Vertex a, Vertex b) const { return tin_[a] <= tin_[b] && tin_[b] < tin_[a] + size_[a]; }
  // Tree edges (child vertices) in increasing id order.
  std::vector<Vertex> edges() const;

 private:
  Vertex root_ = kNoVertex;
  std::vector<Vertex> parent_;
  std::vector<EdgeId> graph_edge_;
  std::vector<std::int32_t> depth_;
  std::vector<std::int32_t> size_;
  std::vector<std::int32_t> child_begin_;
  std::vector<Vertex> child_list_;
  std::vector<Vertex> preorder_;
  std::vector<std::int32_t> tin_;
};

// Constant-time LCA: Euler tour plus a sparse table over tour depths.
class LcaIndex {
 public:
  LcaIndex() = default;
  explicit LcaIndex(const RootedTree& tree);
  Vertex lca(Vertex u, Vertex v) const;

 private:
  const RootedTree* tree_ = nullptr;
  std::vector<Vertex> tour_;
  std::vector<std::int32_t> first_;
  std::vector<std::vector<Vertex>> table_;
  std::vector<std::uint8_t> log_;
};

// Closed interval of positions.
struct Interval {
  std::int32_t lo;
  std::int32_t hi;
  bool operator==(const Interval&) const = default;
};

// Heavy path decomposition over tree edges. Heavy child: largest subtree,
// ties to the smaller vertex id. Positions follow the global edge order in
// which every subtree T_e occupies a contiguous range right after e.
class HeavyPathDecomposition {
 public:
  HeavyPathDecomposition() = default;
  explicit HeavyPathDecomposition(const RootedTree& tree);

  std::int32_t position(Vertex edge) const { return pos_[edge]; }
  Vertex edge_at(std::int32_t position) const { return order_[position]; }
  std::int32_t num_positions() const { return static_cast<std::int32_t>(order_.size()); }

  std::int32_t num_paths() const { return static_cast<std::int32_t>(path_top_.size()); }
  std::int32_t path_of(Vertex edge) const { return path_of_[edge]; }
  // Vertex above the first edge of the path.
  Vertex path_top(std::int32_t p) const { return path_top_[p]; }
  // Deepest vertex of the path.
  Vertex path_tail(std::int32_t p) const { return order_[path_begin_[p] + path_len_[p] - 1]; }
  std::int32_t path_begin(std::int32_t p) const { return path_begin_[p]; }
  std::int32_t path_length(std::int32_t p) const { return path_len_[p]; }
  // 0-based index of the edge within its path, counted from the top.
  std::int32_t index_in_path(Vertex edge) const { return pos_[edge] - path_begin_[path_of_[edge]]; }

  // Positions of edges strictly below `edge`; empty when head(edge) is a leaf.
  bool subtree_range(Vertex edge, Interval& out) const;

  // Calls visit(Interval) for maximal runs of the u..v tree path. `lca` must
  // be the lowest common ancestor of u and v.
  template <class Visit>
  void for_each_path_interval(Vertex u, Vertex v, Vertex lca, Visit&& visit) const {
    climb(u, lca, visit);
    climb(v, lca, visit);
  }

  // Calls visit(path, last_index) for each heavy path meeting the x..ancestor
  // path, where last_index is the deepest edge of that path on it.
  template <class Visit>
  void for_each_path_segment(Vertex x, Vertex ancestor, Visit&& visit) const {
    while (x != ancestor) {
      const std::int32_t p = path_of_[x];
      const Vertex top = path_top_[p];
      visit(p, pos_[x] - path_begin_[p]);
      x = depth_[top] >= depth_[ancestor] ? top : ancestor;
    }
  }

  std::vector<Interval> decompose_path(Vertex u, Vertex v, Vertex lca) const;

 private:
  template <class Visit>
  void climb(Vertex x, Vertex ancestor, Visit& visit) const {
    while (x != ancestor) {
      const std::int32_t p = path_of_[x];
      const Vertex top = path_top_[p];
      if (depth_[top] >= depth_[ancestor]) {
        visit(Interval{path_begin_[p], pos_[x]});
        x = top;
      } else {
        visit(Interval{pos_[x] - (depth_[x] - depth_[ancestor]) + 1, pos_[x]});
        x = ancestor;
      }
    }
  }

  void emit_path(const RootedTree& tree, Vertex top, Vertex first, const std::vector<Vertex>& heavy);

  std::vector<std::int32_t> pos_;
  std::vector<Vertex> order_;
  std::vector<std::int32_t> path_of_;
  std::vector<Vertex> path_top_;
  std::vector<std::int32_t> path_begin_;
  std::vector<std::int32_t> path_len_;
  std::vector<std::int32_t> size_;
  std::vector<std::int32_t> depth_;
};

// A rooted tree with its LCA index and heavy path decomposition.
struct TreeIndex {
  RootedTree tree;
  LcaIndex lca;
  HeavyPathDecomposition hld;

  explicit TreeIndex(RootedTree t);
  TreeIndex(const TreeIndex&) = delete;
  TreeIndex& operator=(const TreeIndex&) = delete;
};

}  // namespace ktp
