#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "cartsel/error.hpp"
#include "cartsel/rank.hpp"
#include "cartsel/select.hpp"

namespace cartsel {

/// An array split into contiguous layers L1, L2, ... with every value of Li
/// <= every value of Li+1. Layer sizes follow layer_sizes(rank, n).
template <typename T> class LayerOrderedHeap {
public:
  LayerOrderedHeap(std::vector<T> values, std::vector<std::size_t> ends,
                   Rank rank)
      : values_(std::move(values)), ends_(std::move(ends)), rank_(rank) {}

  /// Builds a heap from explicit layers without checking the ordering.
  static LayerOrderedHeap from_layers(const std::vector<std::vector<T>> &layers,
                                      Rank rank) {
    std::vector<T> values;
    std::vector<std::size_t> ends;
    for (const auto &layer : layers) {
      values.insert(values.end(), layer.begin(), layer.end());
      ends.push_back(values.size());
    }
    return LayerOrderedHeap(std::move(values), std::move(ends), rank);
  }

  std::size_t size() const noexcept { return values_.size(); }
  std::size_t layer_count() const noexcept { return ends_.size(); }
  const Rank &rank() const noexcept { return rank_; }
  std::span<const T> values() const noexcept { return values_; }
  std::span<const std::size_t> layer_ends() const noexcept { return ends_; }

  std::span<const T> layer(std::size_t i) const {
    const std::size_t begin = i == 0 ? 0 : ends_[i - 1];
    return std::span<const T>(values_).subspan(begin, ends_[i] - begin);
  }

private:
  std::vector<T> values_;
  std::vector<std::size_t> ends_;
  Rank rank_;
};

/// Partitions `values` into a layer-ordered heap. Works from the last layer
/// boundary down to the first; each step selects within the prefix that is
/// still unordered, and prefix lengths shrink geometrically.
template <typename T, typename Compare = std::less<>>
LayerOrderedHeap<T> lohify(std::vector<T> values, const Rank &rank,
                           Compare comp = {}) {
  if (values.empty())
    throw Error(ErrorKind::empty_input, "lohify: empty input");
  const auto sizes = layer_sizes(rank, values.size());
  std::vector<std::size_t> ends(sizes.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    ends[i] = total += sizes[i];

  std::span<T> prefix(values.data(), total);
  for (std::size_t i = ends.size(); i-- > 1;) {
    prefix = prefix.first(ends[i]);
    linear_select(prefix, ends[i - 1], std::ref(comp));
  }
  values.resize(total);
  return LayerOrderedHeap<T>(std::move(values), std::move(ends), rank);
}

/// True iff max(Li) <= min(Li+1) for all adjacent layers and the layer sizes
/// match the rank's schedule.
template <typename T> bool verify_loh(const LayerOrderedHeap<T> &heap) {
  if (heap.size() == 0)
    return heap.layer_count() == 0;
  const auto sizes = layer_sizes(heap.rank(), heap.size());
  if (sizes.size() != heap.layer_count())
    return false;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (heap.layer(i).size() != sizes[i])
      return false;
  for (std::size_t i = 0; i + 1 < heap.layer_count(); ++i) {
    const auto a = heap.layer(i), b = heap.layer(i + 1);
    if (*std::min_element(b.begin(), b.end()) <
        *std::max_element(a.begin(), a.end()))
      return false;
  }
  return true;
}

} // namespace cartsel
