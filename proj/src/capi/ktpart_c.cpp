#include "ktpart/ktpart.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <variant>

#include "graph.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"

struct ktp_graph {
  ktp::AnyGraph g;
};

struct ktp_partition {
  ktp::Partition p;
};

struct ktp_kt_result {
  std::variant<std::int64_t, double> lambda;
  double threshold = 0;
  ktp_partition nontrivial;
  ktp_partition with_trivial;
  std::int32_t trees_packed = 0;
  std::int32_t trees_distinct = 0;
  std::int32_t trees_with_forest = 0;
  bool verified = false;
};

struct ktp_cut {
  std::variant<std::int64_t, double> weight;
  std::vector<char> shore;
  std::int32_t contracted_vertices = 0;
  std::int64_t contracted_edges = 0;
  double contracted_edge_bound = 0;
  std::int32_t attempts = 0;
  bool from_contraction = false;
};

namespace {

thread_local std::string last_error;

ktp_status fail(ktp_status status, const char* message) {
  last_error = message;
  return status;
}

template <class Body>
ktp_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return KTP_OK;
  } catch (const ktp::Error& e) {
    return fail(static_cast<ktp_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KTP_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(KTP_ERR_INTERNAL, e.what());
  }
}

std::optional<ktp::WeightMode> to_mode(ktp_weight_mode mode) {
  switch (mode) {
    case KTP_WEIGHTS_INT:
      return ktp::WeightMode::kExact;
    case KTP_WEIGHTS_FLOAT:
      return ktp::WeightMode::kFloat;
    default:
      return std::nullopt;
  }
}

ktp::PipelineOptions to_pipeline(const ktp_options* options) {
  ktp_options o;
  ktp_options_init(&o);
  if (options) o = *options;
  ktp::PipelineOptions p;
  p.packing.tree_multiplier = o.tree_multiplier;
  p.packing.oversampling = o.oversampling;
  p.packing.seed = o.seed;
  p.workers = o.workers < 1 ? 1 : o.workers;
  p.paranoid = o.paranoid != 0;
  p.verify = o.verify != 0;
  p.keep_cuts = false;
  return p;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class W>
ktp::WeightedGraph<W> graph_from_arrays(std::int32_t n, std::size_t m, const std::int32_t* u, const std::int32_t* v,
                                        const W* w) {
  if (n < 0 || (m > 0 && (!u || !v || !w))) throw ktp::Error(ktp::ErrorCode::kInvalidArgument, "null edge arrays");
  std::vector<ktp::Edge<W>> edges(m);
  for (std::size_t i = 0; i < m; ++i) edges[i] = {u[i], v[i], w[i]};
  return ktp::WeightedGraph<W>::from_edges(n, std::move(edges));
}

ktp::Ratio checked_ratio(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) throw ktp::Error(ktp::ErrorCode::kInvalidArgument, "epsilon must be a non-negative fraction");
  return ktp::Ratio{num, den};
}

double as_double(const std::variant<std::int64_t, double>& x) {
  return std::visit([](auto v) { return static_cast<double>(v); }, x);
}

#define KTP_REQUIRE(cond, what) \
  if (!(cond)) return fail(KTP_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

void ktp_options_init(ktp_options* options) {
  if (!options) return;
  const ktp::PipelineOptions p;
  const ktp::ConnectivityConfig c;
  options->tree_multiplier = p.packing.tree_multiplier;
  options->oversampling = p.packing.oversampling;
  options->seed = p.packing.seed;
  options->workers = p.workers;
  options->paranoid = 0;
  options->verify = 0;
  options->sample_constant = c.sample_constant;
}

const char* ktp_last_error(void) { return last_error.c_str(); }

const char* ktp_status_name(ktp_status status) {
  switch (status) {
    case KTP_OK:
      return "ok";
    case KTP_ERR_PARSE:
      return "parse error";
    case KTP_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case KTP_ERR_DISCONNECTED:
      return "disconnected graph";
    case KTP_ERR_OVERFLOW:
      return "overflow";
    case KTP_ERR_NOT_SIMPLE:
      return "graph is not simple";
    case KTP_ERR_TOO_LARGE:
      return "input too large";
    case KTP_ERR_VERIFICATION:
      return "verification failed";
    case KTP_ERR_IO:
      return "i/o error";
    case KTP_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* ktp_version(void) { return "0.1.0"; }

ktp_status ktp_parse_ratio(const char* text, int64_t* num, int64_t* den) {
  KTP_REQUIRE(text && num && den, "null argument");
  return guarded([&] {
    const ktp::Ratio r = ktp::Ratio::parse(text);
    *num = r.num;
    *den = r.den;
  });
}

ktp_status ktp_graph_from_text(const char* text, ktp_weight_mode mode, ktp_graph** out) {
  KTP_REQUIRE(text && out, "null argument");
  return guarded([&] { *out = new ktp_graph{ktp::load_graph(text, to_mode(mode))}; });
}

ktp_status ktp_graph_from_file(const char* path, ktp_weight_mode mode, ktp_graph** out) {
  KTP_REQUIRE(path && out, "null argument");
  return guarded([&] { *out = new ktp_graph{ktp::load_graph_file(path, to_mode(mode))}; });
}

ktp_status ktp_graph_from_edges(int32_t n, size_t m, const int32_t* u, const int32_t* v, const int64_t* w,
                                ktp_graph** out) {
  KTP_REQUIRE(out, "null argument");
  return guarded([&] { *out = new ktp_graph{graph_from_arrays<std::int64_t>(n, m, u, v, w)}; });
}

ktp_status ktp_graph_from_float_edges(int32_t n, size_t m, const int32_t* u, const int32_t* v, const double* w,
                                      ktp_graph** out) {
  KTP_REQUIRE(out, "null argument");
  return guarded([&] { *out = new ktp_graph{graph_from_arrays<double>(n, m, u, v, w)}; });
}

ktp_status ktp_graph_generate(const char* kind, const int64_t* params, size_t num_params, uint64_t seed,
                              ktp_graph** out) {
  KTP_REQUIRE(kind && out && (params || num_params == 0), "null argument");
  return guarded([&] {
    const ktp::GraphKind k = ktp::parse_graph_kind(kind);
    *out = new ktp_graph{ktp::random_graph(k, std::span<const std::int64_t>(params, num_params), seed)};
  });
}

void ktp_graph_free(ktp_graph* graph) { delete graph; }

int32_t ktp_graph_num_vertices(const ktp_graph* graph) {
  if (!graph) return 0;
  return std::visit([](const auto& g) { return g.num_vertices(); }, graph->g);
}

size_t ktp_graph_num_edges(const ktp_graph* graph) {
  if (!graph) return 0;
  return std::visit([](const auto& g) { return g.num_edges(); }, graph->g);
}

int ktp_graph_is_float(const ktp_graph* graph) { return graph && graph->g.index() == 1; }

int ktp_graph_index_base(const ktp_graph* graph) {
  if (!graph) return 0;
  return std::visit([](const auto& g) { return g.index_base(); }, graph->g);
}

ktp_status ktp_graph_edge(const ktp_graph* graph, size_t index, int32_t* u, int32_t* v, double* w) {
  KTP_REQUIRE(graph, "null graph");
  KTP_REQUIRE(index < ktp_graph_num_edges(graph), "edge index out of range");
  std::visit(
      [&](const auto& g) {
        const auto& e = g.edge(static_cast<ktp::EdgeId>(index));
        if (u) *u = e.u;
        if (v) *v = e.v;
        if (w) *w = static_cast<double>(e.w);
      },
      graph->g);
  return KTP_OK;
}

ktp_status ktp_graph_to_text(const ktp_graph* graph, char** out) {
  KTP_REQUIRE(graph && out, "null argument");
  return guarded([&] { *out = copy_string(std::visit([](const auto& g) { return ktp::to_edge_list(g); }, graph->g)); });
}

void ktp_string_free(char* text) { std::free(text); }

int32_t ktp_partition_size(const ktp_partition* p) { return p ? p->p.size() : 0; }

int32_t ktp_partition_num_blocks(const ktp_partition* p) { return p ? p->p.num_blocks() : 0; }

int32_t ktp_partition_block_of(const ktp_partition* p, int32_t v) {
  if (!p || v < 0 || v >= p->p.size()) return -1;
  return p->p.block_of(v);
}

int ktp_partition_equal(const ktp_partition* a, const ktp_partition* b) { return a && b && a->p == b->p; }

ktp_status ktp_partition_to_text(const ktp_partition* p, int base, char** out) {
  KTP_REQUIRE(p && out, "null argument");
  return guarded([&] { *out = copy_string(p->p.serialize(base)); });
}

ktp_status ktp_kt_partition(const ktp_graph* graph, int64_t eps_num, int64_t eps_den, const ktp_options* options,
                            ktp_kt_result** out) {
  KTP_REQUIRE(graph && out, "null argument");
  return guarded([&] {
    const ktp::Ratio eps = checked_ratio(eps_num, eps_den);
    const ktp::PipelineOptions opts = to_pipeline(options);
    std::visit(
        [&](const auto& g) {
          const auto r = ktp::kt_partition(g, eps, opts);
          auto* res = new ktp_kt_result;
          res->lambda = r.lambda;
          res->threshold = static_cast<double>(r.threshold);
          res->nontrivial.p = r.nontrivial;
          res->with_trivial.p = r.with_trivial;
          res->trees_packed = r.trees_packed;
          res->trees_distinct = r.trees_distinct;
          res->trees_with_forest = r.trees_with_forest;
          res->verified = r.verified;
          *out = res;
        },
        graph->g);
  });
}

ktp_status ktp_oracle_kt_partition(const ktp_graph* graph, int64_t eps_num, int64_t eps_den, ktp_kt_result** out) {
  KTP_REQUIRE(graph && out, "null argument");
  return guarded([&] {
    const ktp::Ratio eps = checked_ratio(eps_num, eps_den);
    std::visit(
        [&](const auto& g) {
          const auto r = ktp::oracle_kt_partition(g, eps);
          auto* res = new ktp_kt_result;
          res->lambda = r.lambda;
          res->threshold = static_cast<double>(ktp::near_min_threshold(r.lambda, eps));
          res->nontrivial.p = r.nontrivial;
          res->with_trivial.p = r.with_trivial;
          res->verified = true;
          *out = res;
        },
        graph->g);
  });
}

void ktp_kt_result_free(ktp_kt_result* result) { delete result; }

double ktp_kt_result_lambda(const ktp_kt_result* result) { return result ? as_double(result->lambda) : 0.0; }

ktp_status ktp_kt_result_lambda_exact(const ktp_kt_result* result, int64_t* out) {
  KTP_REQUIRE(result && out, "null argument");
  KTP_REQUIRE(result->lambda.index() == 0, "result has float weights");
  *out = std::get<std::int64_t>(result->lambda);
  return KTP_OK;
}

double ktp_kt_result_threshold(const ktp_kt_result* result) { return result ? result->threshold : 0.0; }

const ktp_partition* ktp_kt_result_partition(const ktp_kt_result* result, int with_trivial) {
  if (!result) return nullptr;
  return with_trivial ? &result->with_trivial : &result->nontrivial;
}

int32_t ktp_kt_result_trees_packed(const ktp_kt_result* result) { return result ? result->trees_packed : 0; }

int32_t ktp_kt_result_trees_distinct(const ktp_kt_result* result) { return result ? result->trees_distinct : 0; }

int32_t ktp_kt_result_trees_with_forest(const ktp_kt_result* result) {
  return result ? result->trees_with_forest : 0;
}

int ktp_kt_result_verified(const ktp_kt_result* result) { return result && result->verified; }

ktp_status ktp_min_cut(const ktp_graph* graph, const ktp_options* options, ktp_cut** out) {
  KTP_REQUIRE(graph && out, "null argument");
  return guarded([&] {
    const ktp::PipelineOptions opts = to_pipeline(options);
    std::visit(
        [&](const auto& g) {
          auto r = ktp::min_cut(g, opts);
          auto* cut = new ktp_cut;
          cut->weight = r.weight;
          cut->shore = std::move(r.shore);
          *out = cut;
        },
        graph->g);
  });
}

ktp_status ktp_edge_connectivity(const ktp_graph* graph, const ktp_options* options, ktp_cut** out) {
  KTP_REQUIRE(graph && out, "null argument");
  if (graph->g.index() != 0) return fail(KTP_ERR_NOT_SIMPLE, "edge connectivity expects integer unit weights");
  return guarded([&] {
    ktp::ConnectivityConfig config;
    if (options) config.sample_constant = options->sample_constant;
    auto r = ktp::edge_connectivity_simple(std::get<0>(graph->g), to_pipeline(options), config);
    auto* cut = new ktp_cut;
    cut->weight = r.value;
    cut->shore = std::move(r.shore);
    cut->contracted_vertices = r.contracted_vertices;
    cut->contracted_edges = r.contracted_edges;
    cut->contracted_edge_bound = r.contracted_edge_bound;
    cut->attempts = r.attempts;
    cut->from_contraction = r.source == ktp::ConnectivityResult::Source::kContracted;
    *out = cut;
  });
}

ktp_status ktp_oracle_min_cut(const ktp_graph* graph, ktp_cut** out) {
  KTP_REQUIRE(graph && out, "null argument");
  return guarded([&] {
    std::visit(
        [&](const auto& g) {
          auto r = ktp::oracle_min_cut(g);
          auto* cut = new ktp_cut;
          cut->weight = r.weight;
          cut->shore = std::move(r.shore);
          *out = cut;
        },
        graph->g);
  });
}

void ktp_cut_free(ktp_cut* cut) { delete cut; }

double ktp_cut_weight(const ktp_cut* cut) { return cut ? as_double(cut->weight) : 0.0; }

ktp_status ktp_cut_weight_exact(const ktp_cut* cut, int64_t* out) {
  KTP_REQUIRE(cut && out, "null argument");
  KTP_REQUIRE(cut->weight.index() == 0, "cut has float weight");
  *out = std::get<std::int64_t>(cut->weight);
  return KTP_OK;
}

int32_t ktp_cut_num_vertices(const ktp_cut* cut) { return cut ? static_cast<int32_t>(cut->shore.size()) : 0; }

int ktp_cut_side(const ktp_cut* cut, int32_t v) {
  if (!cut || v < 0 || static_cast<std::size_t>(v) >= cut->shore.size()) return -1;
  return cut->shore[static_cast<std::size_t>(v)] ? 1 : 0;
}

int32_t ktp_cut_contracted_vertices(const ktp_cut* cut) { return cut ? cut->contracted_vertices : 0; }

int64_t ktp_cut_contracted_edges(const ktp_cut* cut) { return cut ? cut->contracted_edges : 0; }

double ktp_cut_contracted_edge_bound(const ktp_cut* cut) { return cut ? cut->contracted_edge_bound : 0.0; }

int32_t ktp_cut_attempts(const ktp_cut* cut) { return cut ? cut->attempts : 0; }

int ktp_cut_from_contraction(const ktp_cut* cut) { return cut && cut->from_contraction; }

}  // extern "C"
