#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "partition.hpp"
#include "tree.hpp"

namespace ktp::test {

using Graph = WeightedGraph<std::int64_t>;

Graph make_graph(Vertex n, const std::vector<Edge<std::int64_t>>& edges);

// Named fixtures. Broom: r=0, x=1, a=2, b=3 with edges r-x, x-a, x-b.
Graph cycle4();
Graph bridged_triangles();
Graph broom(std::int64_t cross_weight = 0);
Graph star(Vertex leaves);
Graph complete(Vertex n);
Graph petersen();

// Connected graph on n vertices with weights in [1, max_weight].
Graph random_connected(Vertex n, std::int64_t max_weight, Rng& rng);

// Random labelled tree as (u, v) pairs.
std::vector<std::pair<Vertex, Vertex>> random_tree_edges(Vertex n, Rng& rng);
RootedTree random_tree(Vertex n, Rng& rng);

// Uniformly random spanning tree of g (random weights, Kruskal).
std::vector<EdgeId> random_spanning_tree(const Graph& g, Rng& rng);

// Calls visit(edge ids) for every spanning tree of g.
void for_each_spanning_tree(const Graph& g, const std::function<void(const std::vector<EdgeId>&)>& visit);

std::int64_t cut_weight(const Graph& g, const std::vector<char>& side);

// Shore below tree edge e (and f), computed by walking parents.
std::vector<char> brute_shore(const RootedTree& t, Vertex e, Vertex f = kNoVertex);

std::int32_t shore_size(const std::vector<char>& side);

// Components of the cut graph H over tree edges, as a partition of the
// tree edge list `t.edges()` (index i is the i-th tree edge).
Partition brute_h_components(const Graph& g, const RootedTree& t, std::int64_t beta);

// Number of tree edges crossing the cut.
std::int32_t tree_crossings(const Graph& g, const std::vector<EdgeId>& tree, const std::vector<char>& side);

// Every cut (side without vertex n-1) of weight at most beta.
std::vector<std::vector<char>> near_min_cuts(const Graph& g, std::int64_t beta);

}  // namespace ktp::test
