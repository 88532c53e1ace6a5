#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>

#include "cartsel/error.hpp"

namespace cartsel {

/// A pool reordered in place into two adjacent parts.
template <typename T> struct Split {
  std::span<T> lower;
  std::span<T> upper;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t &state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

template <typename T, typename Compare>
void insertion_sort(std::span<T> xs, Compare &comp) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    T x = std::move(xs[i]);
    std::size_t j = i;
    for (; j > 0 && comp(x, xs[j - 1]); --j)
      xs[j] = std::move(xs[j - 1]);
    xs[j] = std::move(x);
  }
}

// Three-way partition around `pivot`: returns [lt, gt) holding the values
// equivalent to it.
template <typename T, typename Compare>
std::pair<std::size_t, std::size_t> partition3(std::span<T> xs, const T &pivot,
                                               Compare &comp) {
  std::size_t lt = 0, i = 0, gt = xs.size();
  while (i < gt) {
    if (comp(xs[i], pivot)) {
      std::swap(xs[lt++], xs[i++]);
    } else if (comp(pivot, xs[i])) {
      std::swap(xs[i], xs[--gt]);
    } else {
      ++i;
    }
  }
  return {lt, gt};
}

template <typename T, typename Compare>
void select_in_place(std::span<T> xs, std::size_t k, Compare &comp);

// Median of the medians of groups of five; leaves the pool permuted.
template <typename T, typename Compare>
T median_of_medians(std::span<T> xs, Compare &comp) {
  std::size_t groups = 0;
  for (std::size_t g = 0; g < xs.size(); g += 5) {
    auto group = xs.subspan(g, std::min<std::size_t>(5, xs.size() - g));
    insertion_sort(group, comp);
    std::swap(xs[groups++], group[group.size() / 2]);
  }
  auto medians = xs.first(groups);
  select_in_place(medians, groups / 2 + 1, comp);
  return *std::max_element(medians.begin(), medians.begin() + groups / 2 + 1,
                           std::ref(comp));
}

template <typename T, typename Compare>
void select_in_place(std::span<T> xs, std::size_t k, Compare &comp) {
  if (k == 0 || k >= xs.size())
    return;
  std::uint64_t rng = 0x5DEECE66Dull ^ xs.size();
  std::size_t budget = 2 * std::bit_width(xs.size()) + 4;
  std::size_t lo = 0, hi = xs.size();
  while (hi - lo > 16) {
    auto window = xs.subspan(lo, hi - lo);
    T pivot = budget > 0
                  ? window[splitmix64(rng) % window.size()]
                  : median_of_medians(window, comp);
    if (budget > 0)
      --budget;
    const auto [lt, gt] = partition3(window, pivot, comp);
    if (k <= lo + lt) {
      hi = lo + lt;
    } else if (k >= lo + gt) {
      lo += gt;
    } else {
      return;
    }
    if (k == lo || k == hi)
      return;
  }
  insertion_sort(xs.subspan(lo, hi - lo), comp);
}

} // namespace detail

/// Reorders `pool` so its first k positions hold a smallest-k multiset.
/// Quickselect with a seeded pivot; after a logarithmic number of rounds the
/// pivot switches to median-of-medians, so the worst case stays linear.
template <typename T, typename Compare = std::less<>>
Split<T> linear_select(std::span<T> pool, std::size_t k, Compare comp = {}) {
  if (k > pool.size())
    throw Error(ErrorKind::contract,
                "linear_select: k=" + std::to_string(k) +
                    " exceeds pool size " + std::to_string(pool.size()));
  detail::select_in_place(pool, k, comp);
  return {pool.first(k), pool.subspan(k)};
}

/// Single pass: values <= bound first, the rest after.
template <typename T>
Split<T> partition_by_value(std::span<T> pool, const T &bound) {
  auto mid = std::partition(pool.begin(), pool.end(),
                            [&](const T &x) { return !(bound < x); });
  const auto n = static_cast<std::size_t>(mid - pool.begin());
  return {pool.first(n), pool.subspan(n)};
}

} // namespace cartsel
