#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ktp {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;

enum class ErrorCode {
  kParse = 1,
  kInvalidArgument,
  kDisconnected,
  kOverflow,
  kNotSimple,
  kTooLarge,
  kVerification,
  kIo,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class WeightMode { kExact, kFloat };

template <class W>
struct WeightTraits;

template <>
struct WeightTraits<std::int64_t> {
  static constexpr WeightMode kMode = WeightMode::kExact;
  // Total edge weight accepted at load time. Penalties and the padding
  // sentinel stay below 2^62 under this cap.
  static constexpr std::int64_t kMaxTotal = std::int64_t{1} << 56;
  static constexpr std::int64_t kInfinity = std::int64_t{1} << 61;
  static bool leq(std::int64_t a, std::int64_t b) { return a <= b; }
  static bool less(std::int64_t a, std::int64_t b) { return a < b; }
  static bool equal(std::int64_t a, std::int64_t b) { return a == b; }
};

template <>
struct WeightTraits<double> {
  static constexpr WeightMode kMode = WeightMode::kFloat;
  static constexpr double kMaxTotal = 1e300;
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();
  static constexpr double kRelTol = 1e-9;
  static bool leq(double a, double b) { return a <= b + kRelTol * std::fabs(b); }
  static bool less(double a, double b) { return a < b - kRelTol * std::fabs(b); }
  static bool equal(double a, double b) { return leq(a, b) && leq(b, a); }
};

// Non-negative rational num/den, used for epsilon and threshold factors.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  // Accepts "a/b", integers and plain decimals ("0.0625").
  static Ratio parse(std::string_view text);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Ratio one_plus() const { return Ratio{num + den, den}; }
  bool operator==(const Ratio&) const = default;
};

// floor(x * r) for exact weights, x * r for float weights.
std::int64_t scale_weight(std::int64_t x, Ratio r);
double scale_weight(double x, Ratio r);

// The threshold (1 + eps) * lambda.
template <class W>
W near_min_threshold(W lambda, Ratio eps) {
  return scale_weight(lambda, eps.one_plus());
}

using Rng = std::mt19937_64;

// Uniform integer in [0, bound). Rejection sampling keeps the result
// independent of the standard library's distribution implementation.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
// Uniform double in [0, 1).
double uniform_unit(Rng& rng);
// Mixes a seed with a stream id into a fresh 64-bit seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

int ceil_log2(std::int64_t n);

}  // namespace ktp
