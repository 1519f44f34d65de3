#include <doctest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "tree.hpp"

using namespace ktp;

namespace {

RootedTree path4() {
  const std::pair<Vertex, Vertex> e[] = {{0, 1}, {1, 2}, {2, 3}};
  return RootedTree::build(4, e);
}

RootedTree broom_tree() {
  const std::pair<Vertex, Vertex> e[] = {{0, 1}, {1, 2}, {1, 3}};
  return RootedTree::build(4, e);
}

std::set<Vertex> positions_to_edges(const HeavyPathDecomposition& h, const std::vector<Interval>& parts) {
  std::set<Vertex> out;
  for (const Interval& iv : parts) {
    for (std::int32_t p = iv.lo; p <= iv.hi; ++p) out.insert(h.edge_at(p));
  }
  return out;
}

std::set<Vertex> brute_path(const RootedTree& t, Vertex u, Vertex v) {
  std::set<Vertex> a;
  for (Vertex x = u; x != t.root(); x = t.parent(x)) a.insert(x);
  std::set<Vertex> out;
  for (Vertex x = v; x != t.root(); x = t.parent(x)) {
    if (!a.erase(x)) out.insert(x);
  }
  out.insert(a.begin(), a.end());
  return out;
}

}  // namespace

TEST_CASE("root is the smallest leaf") {
  const RootedTree t = path4();
  CHECK(t.root() == 0);
  CHECK(t.parent(1) == 0);
  CHECK(t.parent(3) == 2);
  CHECK(t.depth(3) == 3);

  const std::pair<Vertex, Vertex> s[] = {{0, 1}, {0, 2}, {0, 3}, {0, 4}};
  const RootedTree star = RootedTree::build(5, s);
  CHECK(star.root() == 1);
  CHECK(star.num_children(0) == 3);
}

TEST_CASE("non-spanning edge sets are rejected") {
  const std::pair<Vertex, Vertex> cyc[] = {{0, 1}, {1, 2}, {2, 0}};
  CHECK_THROWS_AS(RootedTree::build(4, cyc), Error);
  const std::pair<Vertex, Vertex> few[] = {{0, 1}};
  CHECK_THROWS_AS(RootedTree::build(3, few), Error);
}

TEST_CASE("lca") {
  const TreeIndex p(path4());
  CHECK(p.lca.lca(2, 3) == 2);
  CHECK(p.lca.lca(3, 3) == 3);
  const TreeIndex b(broom_tree());
  CHECK(b.lca.lca(2, 3) == 1);

  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const TreeIndex idx(test::random_tree(40, rng));
    const RootedTree& t = idx.tree;
    for (Vertex u = 0; u < 40; ++u) {
      for (Vertex v = 0; v < 40; ++v) {
        Vertex a = u;
        while (!t.is_ancestor(a, v)) a = t.parent(a);
        REQUIRE(idx.lca.lca(u, v) == a);
      }
    }
  }
}

TEST_CASE("subtree ranges") {
  const TreeIndex p(path4());
  Interval iv{};
  REQUIRE(p.hld.subtree_range(1, iv));
  CHECK(positions_to_edges(p.hld, {iv}) == std::set<Vertex>{2, 3});
  CHECK_FALSE(p.hld.subtree_range(3, iv));

  const TreeIndex b(broom_tree());
  REQUIRE(b.hld.subtree_range(1, iv));
  CHECK(positions_to_edges(b.hld, {iv}) == std::set<Vertex>{2, 3});

  Rng rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const TreeIndex idx(test::random_tree(60, rng));
    const RootedTree& t = idx.tree;
    for (Vertex e : t.edges()) {
      std::set<Vertex> below;
      for (Vertex f : t.edges()) {
        if (f != e && t.is_ancestor(e, f)) below.insert(f);
      }
      Interval r{};
      const bool any = idx.hld.subtree_range(e, r);
      CHECK(any == !below.empty());
      if (any) CHECK(positions_to_edges(idx.hld, {r}) == below);
    }
  }
}

TEST_CASE("path decomposition") {
  const TreeIndex p(path4());
  const auto one = p.hld.decompose_path(0, 3, 0);
  REQUIRE(one.size() == 1);
  CHECK(one[0].hi - one[0].lo + 1 == 3);
  CHECK(p.hld.decompose_path(2, 2, 2).empty());

  const TreeIndex b(broom_tree());
  const auto two = b.hld.decompose_path(2, 3, 1);
  CHECK(two.size() == 2);
  CHECK(positions_to_edges(b.hld, two) == std::set<Vertex>{2, 3});

  Rng rng(17);
  for (int rep = 0; rep < 30; ++rep) {
    const Vertex n = 2 + static_cast<Vertex>(uniform_below(rng, 300));
    const TreeIndex idx(test::random_tree(n, rng));
    const int bound = 2 * ceil_log2(n) + 1;
    for (int q = 0; q < 200; ++q) {
      const auto u = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      const auto v = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
      const auto parts = idx.hld.decompose_path(u, v, idx.lca.lca(u, v));
      CHECK(static_cast<int>(parts.size()) <= bound);
      CHECK(positions_to_edges(idx.hld, parts) == brute_path(idx.tree, u, v));
    }
  }
}

TEST_CASE("heavy paths cover every edge once") {
  Rng rng(23);
  const TreeIndex idx(test::random_tree(100, rng));
  const auto& h = idx.hld;
  std::vector<int> seen(100, 0);
  for (std::int32_t p = 0; p < h.num_paths(); ++p) {
    Vertex above = h.path_top(p);
    for (std::int32_t i = 0; i < h.path_length(p); ++i) {
      const Vertex e = h.edge_at(h.path_begin(p) + i);
      CHECK(idx.tree.parent(e) == above);
      CHECK(h.index_in_path(e) == i);
      ++seen[e];
      above = e;
    }
    CHECK(idx.tree.num_children(h.path_tail(p)) == 0);
  }
  for (Vertex v = 0; v < 100; ++v) CHECK(seen[v] == (v == idx.tree.root() ? 0 : 1));
}
