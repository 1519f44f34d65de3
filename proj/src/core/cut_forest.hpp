#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pair_lists.hpp"
#include "respecting_cuts.hpp"
#include "score_array.hpp"

namespace ktp {

// The cut graph H of a tree has the tree edges as vertices and an edge
// {e, f} for every non-trivial pair whose cut weighs at most beta. Colors
// (indexed by tree edge) name the components found so far.

// partner[e] is a tree edge f with a different color such that {e, f} is
// an edge of H, or kNoVertex.
struct PartnerRecord {
  std::vector<Vertex> partner;

  explicit PartnerRecord(Vertex n = 0) : partner(static_cast<std::size_t>(n), kNoVertex) {}
  void offer(Vertex e, Vertex f) {
    if (partner[e] == kNoVertex) partner[e] = f;
  }
  void merge(const PartnerRecord& other);
  std::size_t count() const;
};

template <class W>
PartnerRecord descendant_pass(const TreeCutContext<W>& ctx, std::span<const Color> colors, W beta);

template <class W>
PartnerRecord independent_empty_pass(const TreeCutContext<W>& ctx, std::span<const Color> colors, W beta);

template <class W>
PartnerRecord independent_nonempty_pass(const TreeCutContext<W>& ctx, const PairLists<W>& lists,
                                        std::span<const Color> colors, W beta);

// For every color class with an outgoing edge of H, at least one member
// receives a partner.
template <class W>
PartnerRecord round_edges(const TreeCutContext<W>& ctx, const PairLists<W>& lists, std::span<const Color> colors,
                          W beta);

template <class W>
struct CutForest {
  // Edges of a spanning forest of H with their exact cut weights.
  std::vector<CutId<W>> edges;
  // Number of color classes at the start of each round.
  std::vector<std::int32_t> classes_per_round;
};

// Boruvka over H: O(log n) rounds of round_edges.
template <class W>
CutForest<W> h_spanning_forest(const TreeCutContext<W>& ctx, const PairLists<W>& lists, W beta);

}  // namespace ktp
