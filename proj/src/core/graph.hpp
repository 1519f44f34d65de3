#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "common.hpp"

namespace ktp {

template <class W>
struct Edge {
  Vertex u;
  Vertex v;
  W w;
};

// Undirected weighted graph without self-loops or parallel edges.
// Edges are stored with u < v and sorted by (u, v); adjacency is a CSR
// array whose ranges sum to 2m.
template <class W>
class WeightedGraph {
 public:
  struct Incidence {
    Vertex to;
    EdgeId edge;
  };

  WeightedGraph() = default;

  // Drops self-loops (counted in dropped_self_loops()), merges parallel
  // edges by summing weights. Throws on non-positive weights, out-of-range
  // endpoints and total weight overflow.
  static WeightedGraph from_edges(Vertex n, std::vector<Edge<W>> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge<W>> edges() const { return edges_; }
  const Edge<W>& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Incidence> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  W weighted_degree(Vertex v) const { return degree_[v]; }
  W total_weight() const { return total_; }
  std::size_t dropped_self_loops() const { return dropped_self_loops_; }

  // Index base used when the graph was read; echoed on output.
  int index_base() const { return base_; }
  void set_index_base(int base) { base_ = base; }

 private:
  Vertex n_ = 0;
  std::vector<Edge<W>> edges_;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Incidence> adj_;
  std::vector<W> degree_;
  W total_{};
  std::size_t dropped_self_loops_ = 0;
  int base_ = 0;
};

using AnyGraph = std::variant<WeightedGraph<std::int64_t>, WeightedGraph<double>>;

// Parses an edge list. Accepted lines:
//   # base=0|1 mode=int|float [n=N]   header (first such comment only)
//   # ...                              comment
//   u v [w]                            edge, weight defaults to 1
//   p <word> n m  /  a u v w  /  e u v [w]  /  c ...   DIMACS (implies base=1)
// The header mode is used unless `mode` is given.
AnyGraph load_graph(std::string_view text, std::optional<WeightMode> mode = std::nullopt);
AnyGraph load_graph_file(const std::string& path, std::optional<WeightMode> mode = std::nullopt);

template <class W>
std::string to_edge_list(const WeightedGraph<W>& g);

template <class W>
bool is_connected(const WeightedGraph<W>& g);

// Connected component id per vertex, ids dense in order of smallest member.
template <class W>
std::vector<std::int32_t> connected_components(const WeightedGraph<W>& g);

// Throws Error(kDisconnected) unless g is connected with at least two vertices.
template <class W>
void require_cut_input(const WeightedGraph<W>& g);

enum class GraphKind { kGnm, kCycle, kBridgedCliques, kPlantedCut };

GraphKind parse_graph_kind(std::string_view name);

// Deterministic per (kind, params, seed). Parameters:
//   gnm            n m [max_weight]         connected, retried until so
//   cycle          n [weight]
//   bridged-cliques a b                      K_a and K_b joined by one unit edge
//   planted-cut    n m_side cross [max_weight]  two connected halves, `cross` edges between
WeightedGraph<std::int64_t> random_graph(GraphKind kind, std::span<const std::int64_t> params, std::uint64_t seed);

// Multigraph contraction: vertex v maps to block[v]; parallel edges are
// summed and edges inside a block dropped.
template <class W>
WeightedGraph<W> contract(const WeightedGraph<W>& g, std::span<const std::int32_t> block, std::int32_t num_blocks);

}  // namespace ktp
