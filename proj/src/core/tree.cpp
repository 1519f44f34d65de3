#include "tree.hpp"

#include <algorithm>

namespace ktp {

RootedTree RootedTree::build(Vertex n, std::span<const std::pair<Vertex, Vertex>> edges,
                             std::span<const EdgeId> graph_edge) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "tree needs at least one vertex");
  if (static_cast<std::int64_t>(edges.size()) != n - 1) {
    throw Error(ErrorCode::kInvalidArgument, "a spanning tree on n vertices has n - 1 edges");
  }
  if (!graph_edge.empty() && graph_edge.size() != edges.size()) {
    throw Error(ErrorCode::kInvalidArgument, "graph edge ids do not match tree edges");
  }
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int32_t> deg_begin(un + 1, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) throw Error(ErrorCode::kInvalidArgument, "invalid tree edge");
    ++deg_begin[u + 1];
    ++deg_begin[v + 1];
  }
  for (std::size_t i = 0; i < un; ++i) deg_begin[i + 1] += deg_begin[i];
  struct Arc {
    Vertex to;
    std::int32_t id;
  };
  std::vector<Arc> arcs(2 * edges.size());
  {
    std::vector<std::int32_t> fill(deg_begin.begin(), deg_begin.end() - 1);
    for (std::int32_t i = 0; i < static_cast<std::int32_t>(edges.size()); ++i) {
      auto [u, v] = edges[i];
      arcs[fill[u]++] = Arc{v, i};
      arcs[fill[v]++] = Arc{u, i};
    }
  }

  RootedTree t;
  t.root_ = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (deg_begin[v + 1] - deg_begin[v] == 1) {
      t.root_ = v;
      break;
    }
  }
  t.parent_.assign(un, kNoVertex);
  t.graph_edge_.assign(un, -1);
  t.depth_.assign(un, 0);
  t.size_.assign(un, 1);
  t.tin_.assign(un, -1);
  t.preorder_.reserve(un);

  // n - 1 edges reaching all n vertices form a tree.
  t.child_begin_.assign(un + 1, 0);
  std::vector<char> seen(un, 0);
  seen[t.root_] = 1;
  std::vector<Vertex> bfs{t.root_};
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    Vertex x = bfs[head];
    for (std::int32_t a = deg_begin[x]; a < deg_begin[x + 1]; ++a) {
      Vertex y = arcs[a].to;
      if (seen[y]) continue;
      seen[y] = 1;
      t.parent_[y] = x;
      t.depth_[y] = t.depth_[x] + 1;
      if (!graph_edge.empty()) t.graph_edge_[y] = graph_edge[arcs[a].id];
      ++t.child_begin_[x + 1];
      bfs.push_back(y);
    }
  }
  if (static_cast<Vertex>(bfs.size()) != n) throw Error(ErrorCode::kInvalidArgument, "tree edges do not span the graph");
  for (std::size_t i = 0; i < un; ++i) t.child_begin_[i + 1] += t.child_begin_[i];
  t.child_list_.resize(un - 1);
  {
    std::vector<std::int32_t> fill(t.child_begin_.begin(), t.child_begin_.end() - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (v != t.root_) t.child_list_[fill[t.parent_[v]]++] = v;
    }
  }
  std::vector<std::pair<Vertex, std::int32_t>> stack{{t.root_, 0}};
  t.tin_[t.root_] = 0;
  t.preorder_.push_back(t.root_);
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    if (i < t.num_children(x)) {
      Vertex y = t.child_list_[t.child_begin_[x] + i];
      ++i;
      t.tin_[y] = static_cast<std::int32_t>(t.preorder_.size());
      t.preorder_.push_back(y);
      stack.emplace_back(y, 0);
    } else {
      stack.pop_back();
    }
  }
  for (std::size_t i = un; i-- > 1;) {
    Vertex v = t.preorder_[i];
    t.size_[t.parent_[v]] += t.size_[v];
  }
  return t;
}

template <class W>
RootedTree RootedTree::from_graph_edges(const WeightedGraph<W>& g, std::span<const EdgeId> tree_edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(tree_edges.size());
  for (EdgeId id : tree_edges) {
    if (id < 0 || static_cast<std::size_t>(id) >= g.num_edges()) throw Error(ErrorCode::kInvalidArgument, "tree edge id out of range");
    pairs.emplace_back(g.edge(id).u, g.edge(id).v);
  }
  return build(g.num_vertices(), pairs, tree_edges);
}

template RootedTree RootedTree::from_graph_edges<std::int64_t>(const WeightedGraph<std::int64_t>&, std::span<const EdgeId>);
template RootedTree RootedTree::from_graph_edges<double>(const WeightedGraph<double>&, std::span<const EdgeId>);

std::vector<Vertex> RootedTree::edges() const {
  std::vector<Vertex> out;
  out.reserve(parent_.size());
  for (Vertex v = 0; v < size(); ++v) {
    if (v != root_) out.push_back(v);
  }
  return out;
}

LcaIndex::LcaIndex(const RootedTree& tree) : tree_(&tree) {
  const Vertex n = tree.size();
  first_.assign(static_cast<std::size_t>(n), 0);
  tour_.reserve(2 * static_cast<std::size_t>(n));
  std::vector<std::pair<Vertex, std::int32_t>> stack{{tree.root(), 0}};
  first_[tree.root()] = 0;
  tour_.push_back(tree.root());
  while (!stack.empty()) {
    auto& [x, i] = stack.back();
    auto kids = tree.children(x);
    if (i < static_cast<std::int32_t>(kids.size())) {
      Vertex y = kids[i++];
      first_[y] = static_cast<std::int32_t>(tour_.size());
      tour_.push_back(y);
      stack.emplace_back(y, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) tour_.push_back(stack.back().first);
    }
  }
  const std::size_t len = tour_.size();
  log_.assign(len + 1, 0);
  for (std::size_t i = 2; i <= len; ++i) log_[i] = static_cast<std::uint8_t>(log_[i / 2] + 1);
  table_.push_back(tour_);
  for (std::size_t k = 1; (std::size_t{1} << k) <= len; ++k) {
    const auto& prev = table_.back();
    std::vector<Vertex> row(len - (std::size_t{1} << k) + 1);
    const std::size_t half = std::size_t{1} << (k - 1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      Vertex a = prev[i];
      Vertex b = prev[i + half];
      row[i] = tree.depth(a) <= tree.depth(b) ? a : b;
    }
    table_.push_back(std::move(row));
  }
}

Vertex LcaIndex::lca(Vertex u, Vertex v) const {
  std::int32_t a = first_[u];
  std::int32_t b = first_[v];
  if (a > b) std::swap(a, b);
  const int k = log_[b - a + 1];
  Vertex x = table_[k][a];
  Vertex y = table_[k][b - (1 << k) + 1];
  return tree_->depth(x) <= tree_->depth(y) ? x : y;
}

HeavyPathDecomposition::HeavyPathDecomposition(const RootedTree& tree) {
  const Vertex n = tree.size();
  const auto un = static_cast<std::size_t>(n);
  pos_.assign(un, -1);
  path_of_.assign(un, -1);
  size_.resize(un);
  depth_.resize(un);
  for (Vertex v = 0; v < n; ++v) {
    size_[v] = tree.subtree_size(v);
    depth_[v] = tree.depth(v);
  }
  std::vector<Vertex> heavy(un, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex c : tree.children(v)) {
      if (heavy[v] == kNoVertex || size_[c] > size_[heavy[v]] || (size_[c] == size_[heavy[v]] && c < heavy[v])) {
        heavy[v] = c;
      }
    }
  }
  order_.reserve(un > 0 ? un - 1 : 0);
  for (Vertex c : tree.children(tree.root())) emit_path(tree, tree.root(), c, heavy);
}

void HeavyPathDecomposition::emit_path(const RootedTree& tree, Vertex top, Vertex first,
                                       const std::vector<Vertex>& heavy) {
  const auto p = static_cast<std::int32_t>(path_top_.size());
  path_top_.push_back(top);
  path_begin_.push_back(static_cast<std::int32_t>(order_.size()));
  std::vector<Vertex> chain;
  for (Vertex x = first; x != kNoVertex; x = heavy[x]) {
    pos_[x] = static_cast<std::int32_t>(order_.size());
    path_of_[x] = p;
    order_.push_back(x);
    chain.push_back(x);
  }
  path_len_.push_back(static_cast<std::int32_t>(chain.size()));
  // Light subtrees hang below the path; deepest path vertex first, and at
  // each vertex the larger subtrees first.
  std::vector<Vertex> light;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    light.clear();
    for (Vertex c : tree.children(*it)) {
      if (c != heavy[*it]) light.push_back(c);
    }
    std::sort(light.begin(), light.end(), [&](Vertex a, Vertex b) {
      return size_[a] != size_[b] ? size_[a] > size_[b] : a < b;
    });
    for (Vertex c : light) emit_path(tree, *it, c, heavy);
  }
}

bool HeavyPathDecomposition::subtree_range(Vertex edge, Interval& out) const {
  if (size_[edge] <= 1) return false;
  out = Interval{pos_[edge] + 1, pos_[edge] + size_[edge] - 1};
  return true;
}

std::vector<Interval> HeavyPathDecomposition::decompose_path(Vertex u, Vertex v, Vertex lca) const {
  std::vector<Interval> out;
  for_each_path_interval(u, v, lca, [&](Interval iv) { out.push_back(iv); });
  return out;
}

TreeIndex::TreeIndex(RootedTree t) : tree(std::move(t)), lca(tree), hld(tree) {}

}  // namespace ktp
