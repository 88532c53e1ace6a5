#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cartsel/error.hpp"
#include "cartsel/value.hpp"

// Brute-force references: materialize every sum, sort, take a prefix.

namespace cartsel::oracle {

inline constexpr std::size_t default_cap = std::size_t{1} << 24;

template <Value T>
std::vector<T> brute_multi(std::span<const std::vector<T>> inputs,
                           std::size_t k, std::size_t cap = default_cap) {
  std::vector<std::size_t> sizes;
  for (const auto &xs : inputs)
    sizes.push_back(xs.size());
  const std::size_t total = inputs.empty() ? 0 : saturating_product(sizes);
  if (total > cap)
    throw Error(ErrorKind::resource,
                "brute force: product size " + std::to_string(total) +
                    " exceeds cap " + std::to_string(cap));
  if (k > total)
    throw Error(ErrorKind::contract, "brute force: k=" + std::to_string(k) +
                                         " exceeds product size " +
                                         std::to_string(total));
  std::vector<T> sums{T{}};
  if (inputs.empty())
    sums.clear();
  for (const auto &xs : inputs) {
    std::vector<T> next;
    next.reserve(sums.size() * xs.size());
    for (const T &s : sums)
      for (const T &x : xs)
        next.push_back(s + x);
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  sums.resize(k);
  return sums;
}

template <Value T>
std::vector<T> brute_pairwise(const std::vector<T> &a, const std::vector<T> &b,
                              std::size_t k, std::size_t cap = default_cap) {
  const std::vector<std::vector<T>> inputs{a, b};
  return brute_multi<T>(inputs, k, cap);
}

} // namespace cartsel::oracle
