#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "tree.hpp"

namespace ktp {

// Partition of [0, n) with dense block ids numbered by smallest member.
class Partition {
 public:
  Partition() = default;
  static Partition whole(Vertex n);
  static Partition singletons(Vertex n);
  // Vertices with equal labels share a block.
  static Partition from_labels(std::span<const std::int64_t> labels);
  // Two blocks (or one if a side is empty) from a 0/1 side vector.
  static Partition bipartition(std::span<const char> side);

  Vertex size() const { return static_cast<Vertex>(block_.size()); }
  std::int32_t num_blocks() const { return blocks_; }
  std::int32_t block_of(Vertex v) const { return block_[v]; }
  std::span<const std::int32_t> labels() const { return block_; }
  std::vector<std::vector<Vertex>> blocks() const;

  // Every block of this partition lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  bool operator==(const Partition&) const = default;

  // One line per block, sorted vertex ids shifted by `base`, blocks in
  // order of smallest member.
  std::string serialize(int base = 0) const;

 private:
  std::vector<std::int32_t> block_;
  std::int32_t blocks_ = 0;
};

Partition meet(const Partition& a, const Partition& b);
Partition meet_partitions(std::span<const Partition> parts);

// Cuts that 1- or 2-respect one tree, named by tree edges (child vertices).
struct CutFamily {
  std::vector<Vertex> singles;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::size_t size() const { return singles.size() + pairs.size(); }
};

// Meet of the cuts' bipartitions in O((|F| + n)) using random 128-bit
// tokens XOR-accumulated along the tree; tokens derive from `seed`.
Partition meet_of_respecting_cuts(const RootedTree& tree, const CutFamily& cuts, std::uint64_t seed);

// Exact O(|F| n) check that every block lies on one side of every cut.
bool verify_meet(const RootedTree& tree, const CutFamily& cuts, const Partition& p);

}  // namespace ktp
