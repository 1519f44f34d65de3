#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace ktp {

template <class W>
WeightedGraph<W> WeightedGraph<W>::from_edges(Vertex n, std::vector<Edge<W>> edges) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  WeightedGraph g;
  g.n_ = n;
  std::size_t kept = 0;
  for (const Edge<W>& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (!(e.w > W{0})) throw Error(ErrorCode::kInvalidArgument, "non-positive edge weight");
    if constexpr (std::is_floating_point_v<W>) {
      if (!std::isfinite(e.w)) throw Error(ErrorCode::kInvalidArgument, "non-finite edge weight");
    }
    if (e.u == e.v) {
      ++g.dropped_self_loops_;
      continue;
    }
    edges[kept++] = Edge<W>{std::min(e.u, e.v), std::max(e.u, e.v), e.w};
  }
  edges.resize(kept);
  std::sort(edges.begin(), edges.end(), [](const Edge<W>& a, const Edge<W>& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });

  __int128 total128 = 0;
  long double total_float = 0;
  for (const Edge<W>& e : edges) {
    if (!g.edges_.empty() && g.edges_.back().u == e.u && g.edges_.back().v == e.v) {
      g.edges_.back().w += e.w;
    } else {
      g.edges_.push_back(e);
    }
    if constexpr (std::is_integral_v<W>) {
      total128 += e.w;
      if (total128 > WeightTraits<W>::kMaxTotal) {
        throw Error(ErrorCode::kOverflow, "total edge weight exceeds 2^56");
      }
    } else {
      total_float += e.w;
    }
  }
  if (g.edges_.size() > static_cast<std::size_t>(std::numeric_limits<EdgeId>::max())) {
    throw Error(ErrorCode::kTooLarge, "too many edges");
  }
  if constexpr (std::is_integral_v<W>) {
    g.total_ = static_cast<W>(total128);
  } else {
    if (total_float > WeightTraits<W>::kMaxTotal) throw Error(ErrorCode::kOverflow, "total edge weight too large");
    g.total_ = static_cast<W>(total_float);
  }

  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.degree_.assign(static_cast<std::size_t>(n), W{0});
  for (const Edge<W>& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
    g.degree_[e.u] += e.w;
    g.degree_[e.v] += e.w;
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adj_.resize(2 * g.edges_.size());
  std::vector<std::int64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < static_cast<EdgeId>(g.edges_.size()); ++id) {
    const Edge<W>& e = g.edges_[id];
    g.adj_[fill[e.u]++] = Incidence{e.v, id};
    g.adj_[fill[e.v]++] = Incidence{e.u, id};
  }
  return g;
}

namespace {

struct RawEdge {
  std::int64_t u;
  std::int64_t v;
  std::string_view w;
  std::size_t line;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(std::string_view tok, std::size_t line) {
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
  if (ec == std::errc::result_out_of_range) throw Error(ErrorCode::kOverflow, "line " + std::to_string(line) + ": integer out of range");
  if (ec != std::errc() || ptr != tok.data() + tok.size()) parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
  return x;
}

template <class W>
W parse_weight(std::string_view tok, std::size_t line) {
  if (tok.empty()) return W{1};
  if constexpr (std::is_integral_v<W>) {
    W w = parse_int(tok, line);
    if (w <= 0) throw Error(ErrorCode::kInvalidArgument, "line " + std::to_string(line) + ": non-positive weight");
    return w;
  } else {
    double w = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), w);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(w)) {
      parse_error(line, "expected a number, got '" + std::string(tok) + "'");
    }
    if (w <= 0) throw Error(ErrorCode::kInvalidArgument, "line " + std::to_string(line) + ": non-positive weight");
    return w;
  }
}

template <class W>
WeightedGraph<W> build_loaded(const std::vector<RawEdge>& raw, int base, std::int64_t declared_n) {
  std::int64_t max_id = -1;
  std::vector<Edge<W>> edges;
  edges.reserve(raw.size());
  for (const RawEdge& r : raw) {
    if (r.u < base || r.v < base) parse_error(r.line, "vertex id below index base " + std::to_string(base));
    std::int64_t u = r.u - base;
    std::int64_t v = r.v - base;
    if (u >= std::numeric_limits<Vertex>::max() || v >= std::numeric_limits<Vertex>::max()) {
      throw Error(ErrorCode::kTooLarge, "line " + std::to_string(r.line) + ": vertex id too large");
    }
    if (declared_n >= 0 && (u >= declared_n || v >= declared_n)) parse_error(r.line, "vertex id exceeds declared vertex count");
    max_id = std::max({max_id, u, v});
    edges.push_back(Edge<W>{static_cast<Vertex>(u), static_cast<Vertex>(v), parse_weight<W>(r.w, r.line)});
  }
  Vertex n = static_cast<Vertex>(declared_n >= 0 ? declared_n : max_id + 1);
  WeightedGraph<W> g = WeightedGraph<W>::from_edges(n, std::move(edges));
  g.set_index_base(base);
  return g;
}

}  // namespace

AnyGraph load_graph(std::string_view text, std::optional<WeightMode> mode) {
  int base = 0;
  bool header_seen = false;
  bool base_explicit = false;
  std::int64_t declared_n = -1;
  WeightMode header_mode = WeightMode::kExact;
  std::vector<RawEdge> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      auto toks = split_ws(line.substr(1));
      bool is_header = std::any_of(toks.begin(), toks.end(), [](std::string_view t) {
        return t.starts_with("base=") || t.starts_with("mode=") || t.starts_with("n=");
      });
      if (!is_header || header_seen || !raw.empty()) continue;
      header_seen = true;
      for (std::string_view t : toks) {
        if (t.starts_with("base=")) {
          std::string_view b = t.substr(5);
          if (b == "0") base = 0;
          else if (b == "1") base = 1;
          else parse_error(line_no, "base must be 0 or 1");
          base_explicit = true;
        } else if (t.starts_with("mode=")) {
          std::string_view m = t.substr(5);
          if (m == "int") header_mode = WeightMode::kExact;
          else if (m == "float") header_mode = WeightMode::kFloat;
          else parse_error(line_no, "mode must be int or float");
        } else if (t.starts_with("n=")) {
          declared_n = parse_int(t.substr(2), line_no);
          if (declared_n < 0) parse_error(line_no, "negative vertex count");
        }
      }
      continue;
    }
    auto toks = split_ws(line);
    if (toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (toks.size() < 3) parse_error(line_no, "malformed problem line");
      declared_n = parse_int(toks[toks.size() == 3 ? 1 : 2], line_no);
      if (!base_explicit) base = 1;
      continue;
    }
    std::size_t first = (toks[0] == "a" || toks[0] == "e") ? 1 : 0;
    std::size_t count = toks.size() - first;
    if (count != 2 && count != 3) parse_error(line_no, "expected 'u v [w]'");
    RawEdge r{parse_int(toks[first], line_no), parse_int(toks[first + 1], line_no),
              count == 3 ? toks[first + 2] : std::string_view{}, line_no};
    raw.push_back(r);
  }

  WeightMode m = mode.value_or(header_mode);
  if (m == WeightMode::kExact) return build_loaded<std::int64_t>(raw, base, declared_n);
  return build_loaded<double>(raw, base, declared_n);
}

AnyGraph load_graph_file(const std::string& path, std::optional<WeightMode> mode) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_graph(ss.str(), mode);
}

template <class W>
std::string to_edge_list(const WeightedGraph<W>& g) {
  std::ostringstream out;
  if constexpr (std::is_floating_point_v<W>) out.precision(17);
  const int base = g.index_base();
  out << "# base=" << base << " mode=" << (std::is_integral_v<W> ? "int" : "float") << " n=" << g.num_vertices() << '\n';
  for (const Edge<W>& e : g.edges()) out << e.u + base << ' ' << e.v + base << ' ' << e.w << '\n';
  return out.str();
}

template <class W>
std::vector<std::int32_t> connected_components(const WeightedGraph<W>& g) {
  const Vertex n = g.num_vertices();
  std::vector<std::int32_t> comp(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> stack;
  std::int32_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const auto& inc : g.neighbors(x)) {
        if (comp[inc.to] < 0) {
          comp[inc.to] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return comp;
}

template <class W>
bool is_connected(const WeightedGraph<W>& g) {
  if (g.num_vertices() <= 1) return true;
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](std::int32_t c) { return c == 0; });
}

template <class W>
void require_cut_input(const WeightedGraph<W>& g) {
  if (g.num_vertices() < 2) throw Error(ErrorCode::kInvalidArgument, "cut routines need at least two vertices");
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is disconnected");
}

template <class W>
WeightedGraph<W> contract(const WeightedGraph<W>& g, std::span<const std::int32_t> block, std::int32_t num_blocks) {
  std::vector<Edge<W>> edges;
  for (const Edge<W>& e : g.edges()) {
    if (block[e.u] != block[e.v]) edges.push_back(Edge<W>{block[e.u], block[e.v], e.w});
  }
  return WeightedGraph<W>::from_edges(num_blocks, std::move(edges));
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "gnm") return GraphKind::kGnm;
  if (name == "cycle") return GraphKind::kCycle;
  if (name == "bridged-cliques") return GraphKind::kBridgedCliques;
  if (name == "planted-cut") return GraphKind::kPlantedCut;
  throw Error(ErrorCode::kInvalidArgument, "unknown graph kind '" + std::string(name) + "'");
}

namespace {

std::int64_t param(std::span<const std::int64_t> p, std::size_t i, std::int64_t fallback) {
  return i < p.size() ? p[i] : fallback;
}

std::int64_t draw_weight(Rng& rng, std::int64_t max_weight) {
  return 1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(max_weight)));
}

// m distinct random pairs over vertices [offset, offset + n).
void sample_pairs(Rng& rng, Vertex offset, std::int64_t n, std::int64_t m, std::int64_t max_weight,
                  std::vector<Edge<std::int64_t>>& out) {
  const std::int64_t total = n * (n - 1) / 2;
  auto key = [n](std::int64_t u, std::int64_t v) { return static_cast<std::uint64_t>(u * n + v); };
  std::unordered_set<std::uint64_t> chosen;
  const bool complement = m > total / 2;
  const std::int64_t target = complement ? total - m : m;
  chosen.reserve(static_cast<std::size_t>(target) * 2);
  while (static_cast<std::int64_t>(chosen.size()) < target) {
    auto u = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    auto v = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    chosen.insert(key(u, v));
  }
  if (complement) {
    for (std::int64_t u = 0; u < n; ++u) {
      for (std::int64_t v = u + 1; v < n; ++v) {
        if (!chosen.count(key(u, v))) {
          out.push_back({static_cast<Vertex>(offset + u), static_cast<Vertex>(offset + v), draw_weight(rng, max_weight)});
        }
      }
    }
  } else {
    std::vector<std::uint64_t> keys(chosen.begin(), chosen.end());
    std::sort(keys.begin(), keys.end());
    for (std::uint64_t k : keys) {
      auto u = static_cast<Vertex>(k / static_cast<std::uint64_t>(n));
      auto v = static_cast<Vertex>(k % static_cast<std::uint64_t>(n));
      out.push_back({offset + u, offset + v, draw_weight(rng, max_weight)});
    }
  }
}

WeightedGraph<std::int64_t> connected_gnm(Rng& rng, std::int64_t n, std::int64_t m, std::int64_t max_weight) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "gnm needs n >= 1");
  if (m < n - 1) throw Error(ErrorCode::kInvalidArgument, "gnm needs m >= n - 1 for a connected graph");
  if (m > n * (n - 1) / 2) throw Error(ErrorCode::kInvalidArgument, "gnm: m exceeds n(n-1)/2");
  if (max_weight < 1) throw Error(ErrorCode::kInvalidArgument, "max weight must be positive");
  constexpr int kAttempts = 100000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Edge<std::int64_t>> edges;
    sample_pairs(rng, 0, n, m, max_weight, edges);
    auto g = WeightedGraph<std::int64_t>::from_edges(static_cast<Vertex>(n), std::move(edges));
    if (is_connected(g)) return g;
  }
  throw Error(ErrorCode::kInvalidArgument, "gnm: failed to draw a connected graph");
}

}  // namespace

WeightedGraph<std::int64_t> random_graph(GraphKind kind, std::span<const std::int64_t> params, std::uint64_t seed) {
  Rng rng(seed);
  auto need = [&](std::size_t k, const char* what) {
    if (params.size() < k) throw Error(ErrorCode::kInvalidArgument, std::string(what) + ": missing parameters");
  };
  switch (kind) {
    case GraphKind::kGnm: {
      need(2, "gnm");
      return connected_gnm(rng, params[0], params[1], param(params, 2, 1));
    }
    case GraphKind::kCycle: {
      need(1, "cycle");
      const std::int64_t n = params[0];
      const std::int64_t w = param(params, 1, 1);
      if (n < 3) throw Error(ErrorCode::kInvalidArgument, "cycle needs n >= 3");
      std::vector<Edge<std::int64_t>> edges;
      for (std::int64_t i = 0; i < n; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n), w});
      return WeightedGraph<std::int64_t>::from_edges(static_cast<Vertex>(n), std::move(edges));
    }
    case GraphKind::kBridgedCliques: {
      need(2, "bridged-cliques");
      const std::int64_t a = params[0];
      const std::int64_t b = params[1];
      if (a < 1 || b < 1) throw Error(ErrorCode::kInvalidArgument, "bridged-cliques needs positive sizes");
      std::vector<Edge<std::int64_t>> edges;
      for (std::int64_t i = 0; i < a; ++i)
        for (std::int64_t j = i + 1; j < a; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), 1});
      for (std::int64_t i = 0; i < b; ++i)
        for (std::int64_t j = i + 1; j < b; ++j) edges.push_back({static_cast<Vertex>(a + i), static_cast<Vertex>(a + j), 1});
      edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(a), 1});
      return WeightedGraph<std::int64_t>::from_edges(static_cast<Vertex>(a + b), std::move(edges));
    }
    case GraphKind::kPlantedCut: {
      need(3, "planted-cut");
      const std::int64_t n = params[0];
      const std::int64_t m_side = params[1];
      const std::int64_t cross = params[2];
      const std::int64_t max_weight = param(params, 3, 1);
      const std::int64_t n1 = n / 2;
      const std::int64_t n2 = n - n1;
      if (n1 < 1 || cross < 1 || cross > n1 * n2) throw Error(ErrorCode::kInvalidArgument, "planted-cut: bad parameters");
      auto left = connected_gnm(rng, n1, std::min(m_side, n1 * (n1 - 1) / 2), max_weight);
      auto right = connected_gnm(rng, n2, std::min(m_side, n2 * (n2 - 1) / 2), max_weight);
      std::vector<Edge<std::int64_t>> edges(left.edges().begin(), left.edges().end());
      for (const auto& e : right.edges()) edges.push_back({static_cast<Vertex>(e.u + n1), static_cast<Vertex>(e.v + n1), e.w});
      std::unordered_set<std::uint64_t> used;
      while (static_cast<std::int64_t>(used.size()) < cross) {
        auto u = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(n1)));
        auto v = n1 + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(n2)));
        if (used.insert(static_cast<std::uint64_t>(u * n + v)).second) {
          edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), 1});
        }
      }
      return WeightedGraph<std::int64_t>::from_edges(static_cast<Vertex>(n), std::move(edges));
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown graph kind");
}

#define KTP_INSTANTIATE(W)                                                                                       \
  template class WeightedGraph<W>;                                                                               \
  template std::string to_edge_list<W>(const WeightedGraph<W>&);                                                 \
  template bool is_connected<W>(const WeightedGraph<W>&);                                                        \
  template std::vector<std::int32_t> connected_components<W>(const WeightedGraph<W>&);                           \
  template void require_cut_input<W>(const WeightedGraph<W>&);                                                   \
  template WeightedGraph<W> contract<W>(const WeightedGraph<W>&, std::span<const std::int32_t>, std::int32_t);

KTP_INSTANTIATE(std::int64_t)
KTP_INSTANTIATE(double)

#undef KTP_INSTANTIATE

}  // namespace ktp
