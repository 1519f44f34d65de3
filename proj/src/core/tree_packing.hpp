#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace ktp {

struct PackingConfig {
  // Bundle size is tree_multiplier * ceil(log2 n).
  double tree_multiplier = 2.0;
  // Skeleton sampling rate is oversampling * ln(n) / lambda_estimate.
  double oversampling = 48.0;
  std::uint64_t seed = 1;
};

struct TreeBundle {
  // Each tree as sorted graph edge ids.
  std::vector<std::vector<EdgeId>> trees;
  double lambda_estimate = 0;
  double sampling_rate = 1;
  std::int32_t packing_iterations = 0;
};

std::int32_t bundle_size(Vertex n, double tree_multiplier);

// Greedy tree packing on a sampled skeleton; trees are completed to
// spanning trees of g with a maximum-weight spanning forest.
template <class W>
TreeBundle pack_trees(const WeightedGraph<W>& g, const PackingConfig& config);

}  // namespace ktp
