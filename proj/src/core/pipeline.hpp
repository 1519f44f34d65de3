#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "partition.hpp"
#include "tree_packing.hpp"

namespace ktp {

struct PipelineOptions {
  PackingConfig packing;
  std::int32_t workers = 1;
  // Adds a second bundle of twice the size (fresh seed) and verifies every
  // per-tree meet.
  bool paranoid = false;
  // Verifies every per-tree meet exactly, O(|F| n) per tree.
  bool verify = false;
  // Keep the generating cuts of every tree in the result.
  bool keep_cuts = true;
};

// Generating cuts of one tree, as graph edge ids.
struct TreeCuts {
  std::vector<EdgeId> tree;
  std::vector<EdgeId> singles;
  std::vector<std::pair<EdgeId, EdgeId>> pairs;
};

template <class W>
struct KtResult {
  W lambda{};
  Ratio epsilon;
  // Cuts of weight at most this are near-minimum.
  W threshold{};
  // Meet of all non-trivial near-minimum cuts.
  Partition nontrivial;
  // The same with the trivial near-minimum cuts: low-degree vertices split off.
  Partition with_trivial;
  // Shore of one minimum cut.
  std::vector<char> min_cut_shore;
  std::vector<TreeCuts> generating_cuts;
  std::int32_t trees_packed = 0;
  std::int32_t trees_distinct = 0;
  std::int32_t trees_with_forest = 0;
  bool verified = false;
};

template <class W>
KtResult<W> kt_partition(const WeightedGraph<W>& g, Ratio epsilon, const PipelineOptions& options);

// Same with threshold factor * lambda (factor >= 1); epsilon = factor - 1.
template <class W>
KtResult<W> kt_partition_scaled(const WeightedGraph<W>& g, Ratio factor, const PipelineOptions& options);

template <class W>
struct MinCut {
  W weight{};
  std::vector<char> shore;
};

// Minimum cut over the 1- and 2-respecting cuts of a packed bundle.
template <class W>
MinCut<W> min_cut(const WeightedGraph<W>& g, const PipelineOptions& options);

struct ConnectivityConfig {
  // Sparsifier sampling constant c2: keep probability c2 ln n / d_min.
  double sample_constant = 64.0;
  // Abort and retry when the contracted graph has more than this many
  // (multi)edges per vertex.
  double abort_factor = 100.0;
  std::int32_t max_attempts = 4;
};

struct ConnectivityResult {
  std::int64_t value = 0;
  std::vector<char> shore;
  enum class Source { kMinDegree, kContracted } source = Source::kMinDegree;
  std::int32_t contracted_vertices = 0;
  std::int64_t contracted_edges = 0;
  // Bound on contracted (multi)edges checked on every run.
  double contracted_edge_bound = 0;
  std::int32_t attempts = 0;
};

// Edge connectivity of a simple unweighted graph via sparsify, KT
// partition of the sparsifier, contract, and exact min cut of the result.
ConnectivityResult edge_connectivity_simple(const WeightedGraph<std::int64_t>& g, const PipelineOptions& options,
                                            const ConnectivityConfig& config = {});

}  // namespace ktp
