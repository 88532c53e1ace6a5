#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cartsel/error.hpp"

namespace cartsel {

/// Rank of a layer-ordered heap: an exact rational > 1. Layer sizes are
/// computed with integer arithmetic so 1.1 * 10 is exactly 11.
class Rank {
public:
  Rank(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ <= 0 || num_ <= den_)
      throw Error(ErrorKind::config, "rank must be a rational > 1, got " +
                                         std::to_string(num) + "/" +
                                         std::to_string(den));
    const auto g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  /// Accepts a decimal with up to nine fractional digits, e.g. 1.1 or 1.05.
  static Rank from_double(double alpha) {
    if (!(alpha > 1.0) || !std::isfinite(alpha) || alpha > 1e9)
      throw Error(ErrorKind::config,
                  "rank must be > 1, got " + std::to_string(alpha));
    std::int64_t den = 1;
    for (int digits = 0; digits <= 9; ++digits, den *= 10) {
      const double scaled = alpha * static_cast<double>(den);
      const double rounded = std::round(scaled);
      if (std::abs(scaled - rounded) <= 1e-9 * scaled)
        return Rank(static_cast<std::int64_t>(rounded), den);
    }
    return Rank(static_cast<std::int64_t>(std::ceil(alpha * 1e9)),
                1'000'000'000);
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double as_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// ceil(alpha * s), saturating well below SIZE_MAX.
  std::size_t grow(std::size_t s) const noexcept {
    constexpr unsigned __int128 cap = std::size_t{1} << 62;
    const unsigned __int128 v =
        (static_cast<unsigned __int128>(s) * static_cast<std::uint64_t>(num_) +
         static_cast<std::uint64_t>(den_) - 1) /
        static_cast<std::uint64_t>(den_);
    return static_cast<std::size_t>(v > cap ? cap : v);
  }

private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Sizes of successive layers: 1, ceil(a), ceil(a*ceil(a)), ... with the last
/// one truncated so the total is exactly n.
inline std::vector<std::size_t> layer_sizes(const Rank &rank, std::size_t n) {
  if (n == 0)
    throw Error(ErrorKind::empty_input, "layer_sizes: n must be >= 1");
  std::vector<std::size_t> sizes;
  std::size_t total = 0, next = 1;
  while (total < n) {
    const std::size_t take = std::min(next, n - total);
    sizes.push_back(take);
    total += take;
    next = rank.grow(next);
  }
#ifdef CARTSEL_FAULT_LAYER_SIZES
  // Negative-control build: lose the final element.
  if (--sizes.back() == 0)
    sizes.pop_back();
#endif
  return sizes;
}

/// Unbounded form of the same schedule, used by nodes whose total size is
/// not known up front.
class LayerSchedule {
public:
  explicit LayerSchedule(const Rank &rank) : rank_(rank), sizes_{1} {}

  std::size_t operator[](std::size_t i) {
    while (sizes_.size() <= i)
      sizes_.push_back(rank_.grow(sizes_.back()));
    return sizes_[i];
  }

  const Rank &rank() const noexcept { return rank_; }

private:
  Rank rank_;
  std::vector<std::size_t> sizes_;
};

} // namespace cartsel
