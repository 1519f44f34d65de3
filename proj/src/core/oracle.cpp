#include "oracle.hpp"

#include <algorithm>

namespace ktp {

template <class W>
OracleCut<W> oracle_min_cut(const WeightedGraph<W>& g) {
  require_cut_input(g);
  const Vertex n = g.num_vertices();
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::vector<W>> a(un, std::vector<W>(un, W{0}));
  for (const Edge<W>& e : g.edges()) {
    a[e.u][e.v] += e.w;
    a[e.v][e.u] += e.w;
  }
  // members[v]: original vertices merged into v.
  std::vector<std::vector<Vertex>> members(un);
  for (Vertex v = 0; v < n; ++v) members[v] = {v};
  std::vector<char> alive(un, 1);
  OracleCut<W> best;
  bool have = false;
  std::vector<W> conn(un);
  std::vector<char> added(un);
  for (Vertex phase = n; phase > 1; --phase) {
    std::fill(added.begin(), added.end(), 0);
    std::fill(conn.begin(), conn.end(), W{0});
    Vertex prev = kNoVertex;
    Vertex last = kNoVertex;
    for (Vertex step = 0; step < phase; ++step) {
      Vertex pick = kNoVertex;
      for (Vertex v = 0; v < n; ++v) {
        if (alive[v] && !added[v] && (pick == kNoVertex || conn[v] > conn[pick])) pick = v;
      }
      added[pick] = 1;
      prev = last;
      last = pick;
      if (step + 1 < phase) {
        for (Vertex v = 0; v < n; ++v) {
          if (alive[v] && !added[v]) conn[v] += a[pick][v];
        }
      }
    }
    // Cut of the phase: `last` against the rest.
    if (!have || conn[last] < best.weight) {
      have = true;
      best.weight = conn[last];
      best.shore.assign(un, 0);
      for (Vertex v : members[last]) best.shore[v] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
      a[prev][v] += a[last][v];
      a[v][prev] = a[prev][v];
    }
    a[prev][prev] = W{0};
    alive[last] = 0;
    members[prev].insert(members[prev].end(), members[last].begin(), members[last].end());
  }
  return best;
}

template <class W>
OracleKt<W> oracle_kt_partition(const WeightedGraph<W>& g, Ratio epsilon) {
  require_cut_input(g);
  const Vertex n = g.num_vertices();
  if (n > 16) throw Error(ErrorCode::kTooLarge, "enumeration oracle is limited to 16 vertices");
  // Vertex n-1 is always outside the shore; masks over the other vertices.
  const std::uint32_t count = 1u << (n - 1);
  std::vector<W> weight(count, W{0});
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    W w{0};
    for (const Edge<W>& e : g.edges()) {
      const bool a = e.u < n - 1 && ((mask >> e.u) & 1u);
      const bool b = e.v < n - 1 && ((mask >> e.v) & 1u);
      if (a != b) w += e.w;
    }
    weight[mask] = w;
  }
  OracleKt<W> out;
  out.lambda = *std::min_element(weight.begin() + 1, weight.end());
  const W beta = near_min_threshold(out.lambda, epsilon);
  Partition p_nt = Partition::whole(n);
  Partition p_all = Partition::whole(n);
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    if (!WeightTraits<W>::leq(weight[mask], beta)) continue;
    const int shore = __builtin_popcount(mask);
    std::vector<char> side(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v + 1 < n; ++v) side[v] = static_cast<char>((mask >> v) & 1u);
    const Partition cut = Partition::bipartition(side);
    p_all = meet(p_all, cut);
    if (shore != 1 && shore != n - 1) p_nt = meet(p_nt, cut);
  }
  out.nontrivial = p_nt;
  out.with_trivial = p_all;
  return out;
}

template OracleCut<std::int64_t> oracle_min_cut(const WeightedGraph<std::int64_t>&);
template OracleCut<double> oracle_min_cut(const WeightedGraph<double>&);
template OracleKt<std::int64_t> oracle_kt_partition(const WeightedGraph<std::int64_t>&, Ratio);
template OracleKt<double> oracle_kt_partition(const WeightedGraph<double>&, Ratio);

}  // namespace ktp
