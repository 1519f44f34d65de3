#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ktpart/ktpart.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitInput = 2;
constexpr int kExitVerification = 3;

struct GraphDeleter {
  void operator()(ktp_graph* g) const { ktp_graph_free(g); }
};
struct ResultDeleter {
  void operator()(ktp_kt_result* r) const { ktp_kt_result_free(r); }
};
struct CutDeleter {
  void operator()(ktp_cut* c) const { ktp_cut_free(c); }
};
using GraphPtr = std::unique_ptr<ktp_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<ktp_kt_result, ResultDeleter>;
using CutPtr = std::unique_ptr<ktp_cut, CutDeleter>;

// Thrown to unwind out of a subcommand with a given exit code.
struct Exit {
  int code;
};

int exit_code(ktp_status status) {
  switch (status) {
    case KTP_OK:
      return kExitOk;
    case KTP_ERR_VERIFICATION:
      return kExitVerification;
    case KTP_ERR_INTERNAL:
      return kExitFailure;
    default:
      return kExitInput;
  }
}

void check(ktp_status status) {
  if (status == KTP_OK) return;
  std::cerr << "error: " << ktp_status_name(status);
  const std::string detail = ktp_last_error();
  if (!detail.empty()) std::cerr << ": " << detail;
  std::cerr << '\n';
  throw Exit{exit_code(status)};
}

std::string take_string(char* s) {
  std::string out(s);
  ktp_string_free(s);
  return out;
}

struct Common {
  ktp_options options{};
  std::string weights = "auto";

  void add_to(CLI::App* cmd, bool with_workers) {
    cmd->add_option("--seed", options.seed, "Random seed");
    if (with_workers) cmd->add_option("--workers", options.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--tree-multiplier", options.tree_multiplier, "Trees per bundle, times log2 n")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--oversampling", options.oversampling, "Skeleton sampling constant")->check(CLI::PositiveNumber);
    cmd->add_flag("--paranoid", options.paranoid, "Second bundle and per-tree verification");
    cmd->add_option("--weights", weights, "Weight mode")->check(CLI::IsMember({"auto", "int", "float"}));
  }

  ktp_weight_mode mode() const {
    if (weights == "int") return KTP_WEIGHTS_INT;
    if (weights == "float") return KTP_WEIGHTS_FLOAT;
    return KTP_WEIGHTS_AUTO;
  }
};

GraphPtr load(const std::string& path, ktp_weight_mode mode) {
  ktp_graph* g = nullptr;
  if (path == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    check(ktp_graph_from_text(text.c_str(), mode, &g));
  } else {
    check(ktp_graph_from_file(path.c_str(), mode, &g));
  }
  return GraphPtr(g);
}

std::string format_weight(double w, bool exact, std::int64_t exact_value) {
  if (exact) return std::to_string(exact_value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

void print_shore(const ktp_cut* cut, int base) {
  std::cout << "shore";
  const std::int32_t n = ktp_cut_num_vertices(cut);
  for (std::int32_t v = 0; v < n; ++v) {
    if (ktp_cut_side(cut, v) == 1) std::cout << ' ' << v + base;
  }
  std::cout << '\n';
}

std::string cut_weight_text(const ktp_cut* cut) {
  std::int64_t exact = 0;
  const bool is_exact = ktp_cut_weight_exact(cut, &exact) == KTP_OK;
  return format_weight(ktp_cut_weight(cut), is_exact, exact);
}

int run_mincut(const std::string& path, Common& common) {
  GraphPtr g = load(path, common.mode());
  ktp_cut* raw = nullptr;
  check(ktp_min_cut(g.get(), &common.options, &raw));
  CutPtr cut(raw);
  std::cout << "lambda " << cut_weight_text(cut.get()) << '\n';
  print_shore(cut.get(), ktp_graph_index_base(g.get()));
  return kExitOk;
}

int run_kt_partition(const std::string& path, Common& common, const std::string& epsilon, bool all, bool verify,
                     bool stats) {
  std::int64_t num = 0;
  std::int64_t den = 1;
  check(ktp_parse_ratio(epsilon.c_str(), &num, &den));
  GraphPtr g = load(path, common.mode());
  common.options.verify = verify ? 1 : 0;
  ktp_kt_result* raw = nullptr;
  check(ktp_kt_partition(g.get(), num, den, &common.options, &raw));
  ResultPtr result(raw);
  const ktp_partition* p = ktp_kt_result_partition(result.get(), all ? 1 : 0);

  if (verify && ktp_graph_num_vertices(g.get()) <= 16) {
    ktp_kt_result* oracle_raw = nullptr;
    check(ktp_oracle_kt_partition(g.get(), num, den, &oracle_raw));
    ResultPtr oracle(oracle_raw);
    const bool same_lambda = ktp_kt_result_lambda(oracle.get()) == ktp_kt_result_lambda(result.get());
    if (!same_lambda || !ktp_partition_equal(p, ktp_kt_result_partition(oracle.get(), all ? 1 : 0))) {
      std::cerr << "error: partition differs from the enumeration oracle\n";
      return kExitVerification;
    }
  }

  char* text = nullptr;
  check(ktp_partition_to_text(p, ktp_graph_index_base(g.get()), &text));
  std::cout << take_string(text);
  if (stats) {
    std::int64_t exact = 0;
    const bool is_exact = ktp_kt_result_lambda_exact(result.get(), &exact) == KTP_OK;
    std::cerr << "lambda " << format_weight(ktp_kt_result_lambda(result.get()), is_exact, exact) << '\n'
              << "blocks " << ktp_partition_num_blocks(p) << '\n'
              << "trees " << ktp_kt_result_trees_packed(result.get()) << " packed, "
              << ktp_kt_result_trees_distinct(result.get()) << " distinct, "
              << ktp_kt_result_trees_with_forest(result.get()) << " with forest\n";
  }
  return kExitOk;
}

int run_edge_connectivity(const std::string& path, Common& common) {
  GraphPtr g = load(path, KTP_WEIGHTS_INT);
  ktp_cut* raw = nullptr;
  check(ktp_edge_connectivity(g.get(), &common.options, &raw));
  CutPtr cut(raw);
  std::cout << "connectivity " << cut_weight_text(cut.get()) << '\n'
            << "source " << (ktp_cut_from_contraction(cut.get()) ? "contracted" : "min-degree") << '\n';
  print_shore(cut.get(), ktp_graph_index_base(g.get()));
  std::cerr << "contracted " << ktp_cut_contracted_vertices(cut.get()) << " vertices, "
            << ktp_cut_contracted_edges(cut.get()) << " edges (bound " << ktp_cut_contracted_edge_bound(cut.get())
            << "), attempts " << ktp_cut_attempts(cut.get()) << '\n';
  return kExitOk;
}

int run_gen(const std::string& kind, const std::vector<std::int64_t>& params, std::uint64_t seed,
            const std::string& output) {
  ktp_graph* raw = nullptr;
  check(ktp_graph_generate(kind.c_str(), params.data(), params.size(), seed, &raw));
  GraphPtr g(raw);
  char* text = nullptr;
  check(ktp_graph_to_text(g.get(), &text));
  const std::string body = take_string(text);
  if (output.empty() || output == "-") {
    std::cout << body;
    return kExitOk;
  }
  std::FILE* f = std::fopen(output.c_str(), "w");
  if (!f || std::fwrite(body.data(), 1, body.size(), f) != body.size() || std::fclose(f) != 0) {
    std::cerr << "error: cannot write " << output << '\n';
    return kExitInput;
  }
  return kExitOk;
}

int run_bench(const std::vector<std::int64_t>& sizes, std::int64_t vertices, std::int64_t max_weight,
              const std::string& epsilon, Common& common) {
  std::int64_t num = 0;
  std::int64_t den = 1;
  check(ktp_parse_ratio(epsilon.c_str(), &num, &den));
  std::cout << "n,m,seconds\n";
  for (std::int64_t m : sizes) {
    const std::int64_t params[] = {vertices, m, max_weight};
    ktp_graph* raw = nullptr;
    check(ktp_graph_generate("gnm", params, 3, common.options.seed, &raw));
    GraphPtr g(raw);
    const auto start = std::chrono::steady_clock::now();
    ktp_kt_result* result = nullptr;
    check(ktp_kt_partition(g.get(), num, den, &common.options, &result));
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    ktp_kt_result_free(result);
    std::cout << ktp_graph_num_vertices(g.get()) << ',' << ktp_graph_num_edges(g.get()) << ',' << elapsed.count()
              << '\n'
              << std::flush;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Near-minimum cuts and KT partitions of weighted graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ktp_version());

  Common common;
  ktp_options_init(&common.options);

  std::string path;
  auto* mincut = app.add_subcommand("mincut", "Minimum cut and one realizing shore");
  mincut->add_option("file", path, "Edge-list file, - for stdin")->required();
  common.add_to(mincut, true);

  std::string epsilon;
  bool all = false;
  bool verify = false;
  bool stats = false;
  auto* kt = app.add_subcommand("kt-partition", "Meet of the near-minimum cuts");
  kt->add_option("file", path, "Edge-list file, - for stdin")->required();
  kt->add_option("--epsilon", epsilon, "Slack in [0, 1/16], decimal or p/q")->required();
  kt->add_flag("--all", all, "Include the trivial near-minimum cuts");
  kt->add_flag("--verify", verify, "Check every per-tree meet and, for n <= 16, compare with enumeration");
  kt->add_flag("--stats", stats, "Print lambda and bundle statistics to stderr");
  common.add_to(kt, true);

  auto* conn = app.add_subcommand("edge-connectivity", "Edge connectivity of a simple unweighted graph");
  conn->add_option("file", path, "Edge-list file, - for stdin")->required();
  conn->add_option("--sample-constant", common.options.sample_constant, "Sparsifier sampling constant")
      ->check(CLI::PositiveNumber);
  common.add_to(conn, true);

  std::string kind;
  std::vector<std::int64_t> params;
  std::string output;
  std::uint64_t gen_seed = 1;
  auto* gen = app.add_subcommand("gen", "Generate a random graph as an edge list");
  gen->add_option("kind", kind, "gnm | cycle | bridged-cliques | planted-cut")->required();
  gen->add_option("params", params, "Integer parameters of the kind")->required();
  gen->add_option("--seed", gen_seed, "Random seed")->required();
  gen->add_option("-o,--output", output, "Output file (default stdout)");

  std::vector<std::int64_t> sizes;
  std::int64_t vertices = 10000;
  std::int64_t max_weight = 8;
  std::string bench_epsilon = "1/16";
  auto* bench = app.add_subcommand("bench", "Time kt-partition on random gnm graphs");
  bench->add_option("--sizes", sizes, "Edge counts")->required()->check(CLI::PositiveNumber);
  bench->add_option("--vertices", vertices, "Vertices per graph")->check(CLI::Range(2, 1 << 30));
  bench->add_option("--max-weight", max_weight, "Edge weights drawn from 1..max")->check(CLI::PositiveNumber);
  bench->add_option("--epsilon", bench_epsilon, "Slack in [0, 1/16]");
  common.add_to(bench, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*mincut) return run_mincut(path, common);
    if (*kt) return run_kt_partition(path, common, epsilon, all, verify, stats);
    if (*conn) return run_edge_connectivity(path, common);
    if (*gen) return run_gen(kind, params, gen_seed, output);
    if (*bench) return run_bench(sizes, vertices, max_weight, bench_epsilon, common);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitFailure;
}
