#include "partition.hpp"

#include <sstream>
#include <unordered_map>

#include "respecting_cuts.hpp"

namespace ktp {

Partition Partition::whole(Vertex n) {
  Partition p;
  p.block_.assign(static_cast<std::size_t>(n), 0);
  p.blocks_ = n > 0 ? 1 : 0;
  return p;
}

Partition Partition::singletons(Vertex n) {
  Partition p;
  p.block_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) p.block_[v] = v;
  p.blocks_ = n;
  return p;
}

Partition Partition::from_labels(std::span<const std::int64_t> labels) {
  Partition p;
  p.block_.resize(labels.size());
  std::unordered_map<std::int64_t, std::int32_t> ids;
  ids.reserve(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, fresh] = ids.try_emplace(labels[v], p.blocks_);
    if (fresh) ++p.blocks_;
    p.block_[v] = it->second;
  }
  return p;
}

Partition Partition::bipartition(std::span<const char> side) {
  std::vector<std::int64_t> labels(side.begin(), side.end());
  return from_labels(labels);
}

std::vector<std::vector<Vertex>> Partition::blocks() const {
  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(blocks_));
  for (Vertex v = 0; v < size(); ++v) out[block_[v]].push_back(v);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  std::vector<std::int32_t> image(static_cast<std::size_t>(blocks_), -1);
  for (Vertex v = 0; v < size(); ++v) {
    std::int32_t& img = image[block_[v]];
    if (img < 0) img = coarser.block_[v];
    if (img != coarser.block_[v]) return false;
  }
  return true;
}

std::string Partition::serialize(int base) const {
  std::ostringstream out;
  for (const auto& blk : blocks()) {
    for (std::size_t i = 0; i < blk.size(); ++i) out << (i ? " " : "") << blk[i] + base;
    out << '\n';
  }
  return out.str();
}

Partition meet(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::kInvalidArgument, "partitions of different ground sets");
  std::vector<std::int64_t> labels(static_cast<std::size_t>(a.size()));
  for (Vertex v = 0; v < a.size(); ++v) {
    labels[v] = static_cast<std::int64_t>(a.block_of(v)) * b.num_blocks() + b.block_of(v);
  }
  return Partition::from_labels(labels);
}

Partition meet_partitions(std::span<const Partition> parts) {
  if (parts.empty()) throw Error(ErrorCode::kInvalidArgument, "meet of no partitions");
  Partition acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = meet(acc, parts[i]);
  return acc;
}

namespace {

struct Token {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  Token& operator^=(const Token& o) {
    hi ^= o.hi;
    lo ^= o.lo;
    return *this;
  }
  bool operator==(const Token&) const = default;
};

struct TokenHash {
  std::size_t operator()(const Token& t) const { return static_cast<std::size_t>(t.hi ^ (t.lo * 0x9e3779b97f4a7c15ULL)); }
};

}  // namespace

Partition meet_of_respecting_cuts(const RootedTree& tree, const CutFamily& cuts, std::uint64_t seed) {
  const Vertex n = tree.size();
  std::vector<Token> flip(static_cast<std::size_t>(n));
  std::uint64_t index = 0;
  auto next_token = [&] {
    Token t{derive_seed(seed, 2 * index), derive_seed(seed, 2 * index + 1)};
    ++index;
    return t;
  };
  for (Vertex e : cuts.singles) flip[e] ^= next_token();
  for (auto [e, f] : cuts.pairs) {
    const Token t = next_token();
    flip[e] ^= t;
    flip[f] ^= t;
  }
  std::vector<Token> sig(static_cast<std::size_t>(n));
  for (Vertex v : tree.preorder()) {
    if (v == tree.root()) continue;
    sig[v] = sig[tree.parent(v)];
    sig[v] ^= flip[v];
  }
  std::unordered_map<Token, std::int64_t, TokenHash> ids;
  ids.reserve(static_cast<std::size_t>(n));
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    labels[v] = ids.try_emplace(sig[v], static_cast<std::int64_t>(ids.size())).first->second;
  }
  return Partition::from_labels(labels);
}

bool verify_meet(const RootedTree& tree, const CutFamily& cuts, const Partition& p) {
  const Vertex n = tree.size();
  if (p.size() != n) return false;
  std::vector<Vertex> rep(static_cast<std::size_t>(p.num_blocks()), kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    if (rep[p.block_of(v)] == kNoVertex) rep[p.block_of(v)] = v;
  }
  auto monochromatic = [&](const std::vector<char>& side) {
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] != side[rep[p.block_of(v)]]) return false;
    }
    return true;
  };
  for (Vertex e : cuts.singles) {
    if (!monochromatic(cut_shore(tree, e))) return false;
  }
  for (auto [e, f] : cuts.pairs) {
    if (!monochromatic(cut_shore(tree, e, f))) return false;
  }
  return true;
}

}  // namespace ktp
