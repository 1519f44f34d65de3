#include <doctest.h>

#include "oracle.hpp"
#include "pipeline.hpp"
#include "support.hpp"

using namespace ktp;
using test::Graph;

namespace {

Partition labels(std::vector<std::int64_t> l) { return Partition::from_labels(l); }

Graph weighted_path() { return test::make_graph(4, {{0, 1, 3}, {1, 2, 1}, {2, 3, 2}}); }

}  // namespace

TEST_CASE("oracle fixtures") {
  CHECK(oracle_kt_partition(test::cycle4(), Ratio{0, 1}).nontrivial == Partition::singletons(4));
  const auto bt = oracle_kt_partition(test::bridged_triangles(), Ratio{0, 1});
  CHECK(bt.lambda == 1);
  CHECK(bt.nontrivial == labels({0, 0, 0, 1, 1, 1}));
  CHECK(oracle_kt_partition(test::complete(4), Ratio{1, 16}).nontrivial == Partition::whole(4));
  CHECK(oracle_min_cut(test::complete(4)).weight == 3);
  CHECK(oracle_min_cut(test::bridged_triangles()).weight == 1);
  CHECK(oracle_min_cut(test::petersen()).weight == 3);
  CHECK_THROWS_AS(oracle_kt_partition(test::complete(17), Ratio{0, 1}), Error);

  Rng rng(97);
  for (int rep = 0; rep < 50; ++rep) {
    const Graph g = test::random_connected(2 + static_cast<Vertex>(uniform_below(rng, 8)), 8, rng);
    const auto sw = oracle_min_cut(g);
    CHECK(sw.weight == oracle_kt_partition(g, Ratio{0, 1}).lambda);
    CHECK(test::cut_weight(g, sw.shore) == sw.weight);
  }
}

TEST_CASE("kt partition fixtures") {
  const PipelineOptions opts;
  const auto bt = kt_partition(test::bridged_triangles(), Ratio{0, 1}, opts);
  CHECK(bt.lambda == 1);
  CHECK(bt.nontrivial == labels({0, 0, 0, 1, 1, 1}));

  const auto s4 = kt_partition(test::star(4), Ratio{0, 1}, opts);
  CHECK(s4.lambda == 1);
  CHECK(s4.nontrivial == Partition::whole(5));
  CHECK(s4.with_trivial == Partition::singletons(5));

  const auto c4 = kt_partition(test::cycle4(), Ratio{0, 1}, opts);
  CHECK(c4.lambda == 2);
  CHECK(c4.nontrivial == Partition::singletons(4));

  const auto wp = kt_partition(weighted_path(), Ratio{0, 1}, opts);
  CHECK(wp.lambda == 1);
  CHECK(wp.nontrivial == labels({0, 0, 1, 1}));

  CHECK(kt_partition(test::complete(4), Ratio{1, 16}, opts).nontrivial == Partition::whole(4));
  CHECK_THROWS_AS(kt_partition(test::cycle4(), Ratio{1, 8}, opts), Error);
  CHECK_THROWS_AS(kt_partition(test::make_graph(4, {{0, 1, 1}, {2, 3, 1}}), Ratio{0, 1}, opts), Error);
}

TEST_CASE("kt partition matches the oracle") {
  Rng rng(101);
  for (int rep = 0; rep < 60; ++rep) {
    const Graph g = test::random_connected(4 + static_cast<Vertex>(uniform_below(rng, 6)), 8, rng);
    for (Ratio eps : {Ratio{0, 1}, Ratio{1, 16}}) {
      PipelineOptions opts;
      opts.packing.seed = 77 + static_cast<std::uint64_t>(rep);
      opts.verify = true;
      const auto got = kt_partition(g, eps, opts);
      const auto want = oracle_kt_partition(g, eps);
      CHECK(got.lambda == want.lambda);
      CHECK(got.nontrivial == want.nontrivial);
      CHECK(got.with_trivial == want.with_trivial);
      CHECK(test::cut_weight(g, got.min_cut_shore) == got.lambda);
    }
  }
}

TEST_CASE("per-tree generating cuts reproduce the tree's near-minimum meet") {
  Rng rng(103);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = test::random_connected(4 + static_cast<Vertex>(uniform_below(rng, 6)), 8, rng);
    PipelineOptions opts;
    opts.packing.seed = static_cast<std::uint64_t>(rep);
    const auto res = kt_partition(g, Ratio{1, 16}, opts);
    const Vertex n = g.num_vertices();
    const auto near = test::near_min_cuts(g, res.threshold);
    for (const TreeCuts& tc : res.generating_cuts) {
      const RootedTree t = RootedTree::from_graph_edges(g, tc.tree);
      std::vector<Vertex> child_of(g.num_edges(), kNoVertex);
      for (Vertex e : t.edges()) child_of[t.graph_edge(e)] = e;
      Partition generated = Partition::whole(n);
      for (EdgeId s : tc.singles) generated = meet(generated, Partition::bipartition(test::brute_shore(t, child_of[s])));
      for (auto [a, b] : tc.pairs) {
        generated = meet(generated, Partition::bipartition(test::brute_shore(t, child_of[a], child_of[b])));
      }
      Partition all = Partition::whole(n);
      for (const auto& side : near) {
        const std::int32_t s = test::shore_size(side);
        if (s == 1 || s == n - 1 || test::tree_crossings(g, tc.tree, side) > 2) continue;
        all = meet(all, Partition::bipartition(side));
      }
      CHECK(generated == all);
    }
  }
}

TEST_CASE("output does not depend on the worker count") {
  const std::int64_t params[] = {300, 1500, 5};
  const Graph g = random_graph(GraphKind::kGnm, params, 9);
  PipelineOptions one;
  PipelineOptions four;
  four.workers = 4;
  const auto a = kt_partition(g, Ratio{1, 16}, one);
  const auto b = kt_partition(g, Ratio{1, 16}, four);
  CHECK(a.lambda == b.lambda);
  CHECK(a.nontrivial == b.nontrivial);
  CHECK(a.nontrivial.serialize() == kt_partition(g, Ratio{1, 16}, one).nontrivial.serialize());
}

TEST_CASE("paranoid mode") {
  PipelineOptions opts;
  opts.paranoid = true;
  const auto r = kt_partition(test::bridged_triangles(), Ratio{0, 1}, opts);
  CHECK(r.verified);
  CHECK(r.trees_packed == 3 * bundle_size(6, opts.packing.tree_multiplier));
  CHECK(r.nontrivial == labels({0, 0, 0, 1, 1, 1}));
}

TEST_CASE("float mode pipeline") {
  std::vector<Edge<double>> e{{0, 1, 0.5}, {1, 2, 0.5}, {0, 2, 0.5}, {3, 4, 0.5}, {4, 5, 0.5}, {3, 5, 0.5}, {2, 3, 0.25}};
  const auto g = WeightedGraph<double>::from_edges(6, e);
  const auto r = kt_partition(g, Ratio{0, 1}, PipelineOptions{});
  CHECK(r.lambda == doctest::Approx(0.25));
  CHECK(r.nontrivial == labels({0, 0, 0, 1, 1, 1}));
  CHECK(min_cut(g, PipelineOptions{}).weight == doctest::Approx(0.25));
}

TEST_CASE("minimum cut") {
  Rng rng(107);
  for (int rep = 0; rep < 40; ++rep) {
    const Graph g = test::random_connected(2 + static_cast<Vertex>(uniform_below(rng, 30)), 8, rng);
    PipelineOptions opts;
    opts.packing.seed = static_cast<std::uint64_t>(rep);
    const auto mc = min_cut(g, opts);
    CHECK(mc.weight == oracle_min_cut(g).weight);
    CHECK(test::cut_weight(g, mc.shore) == mc.weight);
  }
}

TEST_CASE("edge connectivity") {
  CHECK(edge_connectivity_simple(test::complete(4), PipelineOptions{}).value == 3);
  CHECK(edge_connectivity_simple(test::petersen(), PipelineOptions{}).value == 3);
  const auto bt = edge_connectivity_simple(test::bridged_triangles(), PipelineOptions{});
  CHECK(bt.value == 1);
  CHECK(Partition::bipartition(bt.shore) == labels({0, 0, 0, 1, 1, 1}));
  CHECK_THROWS_AS(edge_connectivity_simple(weighted_path(), PipelineOptions{}), Error);

  const std::int64_t params[] = {60, 40, 3};
  const Graph planted = random_graph(GraphKind::kPlantedCut, params, 4);
  std::vector<Edge<std::int64_t>> unit;
  for (const auto& e : planted.edges()) unit.push_back({e.u, e.v, 1});
  const Graph g = Graph::from_edges(planted.num_vertices(), unit);
  const auto r = edge_connectivity_simple(g, PipelineOptions{});
  CHECK(r.value == oracle_min_cut(g).weight);
  CHECK(test::cut_weight(g, r.shore) == r.value);
  CHECK(static_cast<double>(r.contracted_edges) <= r.contracted_edge_bound);
}
