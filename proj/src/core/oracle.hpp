#pragma once

#include <vector>

#include "graph.hpp"
#include "partition.hpp"

namespace ktp {

template <class W>
struct OracleCut {
  W weight{};
  std::vector<char> shore;
};

// Stoer-Wagner on a dense matrix, O(n^3).
template <class W>
OracleCut<W> oracle_min_cut(const WeightedGraph<W>& g);

template <class W>
struct OracleKt {
  W lambda{};
  Partition nontrivial;
  Partition with_trivial;
};

// Enumerates all 2^(n-1) - 1 cuts; n <= 16.
template <class W>
OracleKt<W> oracle_kt_partition(const WeightedGraph<W>& g, Ratio epsilon);

}  // namespace ktp
