#include "common.hpp"

#include <charconv>

namespace ktp {

namespace {

std::int64_t parse_digits(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || value < 0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid ratio '" + std::string(whole) + "'");
  }
  return value;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Ratio Ratio::parse(std::string_view text) {
  Ratio r;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    r.num = parse_digits(text.substr(0, slash), text);
    r.den = parse_digits(text.substr(slash + 1), text);
    if (r.den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator in '" + std::string(text) + "'");
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15) throw Error(ErrorCode::kInvalidArgument, "too many decimals in '" + std::string(text) + "'");
    r.den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) r.den *= 10;
    std::int64_t ip = int_part.empty() ? 0 : parse_digits(int_part, text);
    std::int64_t fp = frac.empty() ? 0 : parse_digits(frac, text);
    r.num = ip * r.den + fp;
  } else {
    r.num = parse_digits(text, text);
  }
  std::int64_t g = gcd64(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  return r;
}

std::int64_t scale_weight(std::int64_t x, Ratio r) {
  __int128 v = static_cast<__int128>(x) * r.num / r.den;
  if (v > std::numeric_limits<std::int64_t>::max()) throw Error(ErrorCode::kOverflow, "threshold overflow");
  return static_cast<std::int64_t>(v);
}

double scale_weight(double x, Ratio r) { return x * r.value(); }

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int ceil_log2(std::int64_t n) {
  int k = 0;
  while ((std::int64_t{1} << k) < n) ++k;
  return k;
}

}  // namespace ktp
