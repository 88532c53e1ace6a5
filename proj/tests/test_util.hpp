#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace cartsel::test {

inline std::vector<std::int64_t> random_ints(std::mt19937_64 &rng,
                                             std::size_t n,
                                             std::int64_t range) {
  std::vector<std::int64_t> xs(n);
  for (auto &x : xs)
    x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range));
  return xs;
}

template <typename T> std::vector<T> sorted(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

} // namespace cartsel::test
