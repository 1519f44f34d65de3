#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace ktp::test {

Graph make_graph(Vertex n, const std::vector<Edge<std::int64_t>>& edges) { return Graph::from_edges(n, edges); }

Graph cycle4() { return make_graph(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}}); }

Graph bridged_triangles() {
  return make_graph(6, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {3, 4, 1}, {4, 5, 1}, {3, 5, 1}, {2, 3, 1}});
}

Graph broom(std::int64_t cross_weight) {
  std::vector<Edge<std::int64_t>> e{{0, 1, 1}, {1, 2, 1}, {1, 3, 1}};
  if (cross_weight > 0) e.push_back({2, 3, cross_weight});
  return make_graph(4, e);
}

Graph star(Vertex leaves) {
  std::vector<Edge<std::int64_t>> e;
  for (Vertex v = 1; v <= leaves; ++v) e.push_back({0, v, 1});
  return make_graph(leaves + 1, e);
}

Graph complete(Vertex n) {
  std::vector<Edge<std::int64_t>> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v, 1});
  }
  return make_graph(n, e);
}

Graph petersen() {
  std::vector<Edge<std::int64_t>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5, 1});
    e.push_back({i, i + 5, 1});
    e.push_back({i + 5, (i + 2) % 5 + 5, 1});
  }
  return make_graph(10, e);
}

std::vector<std::pair<Vertex, Vertex>> random_tree_edges(Vertex n, Rng& rng) {
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  for (Vertex i = n - 1; i > 0; --i) std::swap(label[i], label[uniform_below(rng, static_cast<std::uint64_t>(i + 1))]);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 1; v < n; ++v) {
    const auto p = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(v)));
    out.emplace_back(label[p], label[v]);
  }
  return out;
}

RootedTree random_tree(Vertex n, Rng& rng) {
  const auto edges = random_tree_edges(n, rng);
  return RootedTree::build(n, edges);
}

Graph random_connected(Vertex n, std::int64_t max_weight, Rng& rng) {
  auto weight = [&] { return 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(max_weight))); };
  std::vector<Edge<std::int64_t>> edges;
  for (auto [u, v] : random_tree_edges(n, rng)) edges.push_back({u, v, weight()});
  const double density = uniform_unit(rng);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (uniform_unit(rng) < density) edges.push_back({u, v, weight()});
    }
  }
  return make_graph(n, edges);
}

namespace {

Vertex find(std::vector<Vertex>& up, Vertex x) {
  while (up[x] != x) x = up[x] = up[up[x]];
  return x;
}

}  // namespace

std::vector<EdgeId> random_spanning_tree(const Graph& g, Rng& rng) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  std::vector<Vertex> up(static_cast<std::size_t>(g.num_vertices()));
  std::iota(up.begin(), up.end(), 0);
  std::vector<EdgeId> out;
  for (EdgeId id : order) {
    const Vertex a = find(up, g.edge(id).u);
    const Vertex b = find(up, g.edge(id).v);
    if (a == b) continue;
    up[a] = b;
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_spanning_tree(const Graph& g, const std::function<void(const std::vector<EdgeId>&)>& visit) {
  const Vertex n = g.num_vertices();
  const auto m = static_cast<EdgeId>(g.num_edges());
  std::vector<EdgeId> chosen;
  // comp is copied per level; n is tiny.
  std::function<void(EdgeId, std::vector<Vertex>)> rec = [&](EdgeId next, std::vector<Vertex> comp) {
    if (static_cast<Vertex>(chosen.size()) == n - 1) {
      visit(chosen);
      return;
    }
    for (EdgeId id = next; id < m; ++id) {
      if (m - id < n - 1 - static_cast<EdgeId>(chosen.size())) return;
      const Vertex a = comp[g.edge(id).u];
      const Vertex b = comp[g.edge(id).v];
      if (a == b) continue;
      std::vector<Vertex> merged = comp;
      for (Vertex& c : merged) {
        if (c == a) c = b;
      }
      chosen.push_back(id);
      rec(id + 1, std::move(merged));
      chosen.pop_back();
    }
  };
  std::vector<Vertex> comp(static_cast<std::size_t>(n));
  std::iota(comp.begin(), comp.end(), 0);
  rec(0, comp);
}

std::int64_t cut_weight(const Graph& g, const std::vector<char>& side) {
  std::int64_t w = 0;
  for (const auto& e : g.edges()) {
    if (side[e.u] != side[e.v]) w += e.w;
  }
  return w;
}

std::vector<char> brute_shore(const RootedTree& t, Vertex e, Vertex f) {
  std::vector<char> side(static_cast<std::size_t>(t.size()), 0);
  for (Vertex v = 0; v < t.size(); ++v) {
    int crossings = 0;
    for (Vertex x = v; x != t.root(); x = t.parent(x)) {
      if (x == e || x == f) ++crossings;
    }
    side[v] = static_cast<char>(crossings % 2);
  }
  return side;
}

std::int32_t shore_size(const std::vector<char>& side) {
  return static_cast<std::int32_t>(std::count(side.begin(), side.end(), 1));
}

Partition brute_h_components(const Graph& g, const RootedTree& t, std::int64_t beta) {
  const std::vector<Vertex> edges = t.edges();
  const auto k = static_cast<Vertex>(edges.size());
  std::vector<Vertex> up(static_cast<std::size_t>(k));
  std::iota(up.begin(), up.end(), 0);
  const Vertex n = t.size();
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) {
      const auto side = brute_shore(t, edges[i], edges[j]);
      const std::int32_t s = shore_size(side);
      if (s == 1 || s == n - 1) continue;
      if (cut_weight(g, side) <= beta) up[find(up, i)] = find(up, j);
    }
  }
  std::vector<std::int64_t> labels(static_cast<std::size_t>(k));
  for (Vertex i = 0; i < k; ++i) labels[i] = find(up, i);
  return Partition::from_labels(labels);
}

std::int32_t tree_crossings(const Graph& g, const std::vector<EdgeId>& tree, const std::vector<char>& side) {
  std::int32_t c = 0;
  for (EdgeId id : tree) {
    if (side[g.edge(id).u] != side[g.edge(id).v]) ++c;
  }
  return c;
}

std::vector<std::vector<char>> near_min_cuts(const Graph& g, std::int64_t beta) {
  const Vertex n = g.num_vertices();
  std::vector<std::vector<char>> out;
  for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
    std::vector<char> side(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v + 1 < n; ++v) side[v] = static_cast<char>((mask >> v) & 1u);
    if (cut_weight(g, side) <= beta) out.push_back(std::move(side));
  }
  return out;
}

}  // namespace ktp::test
