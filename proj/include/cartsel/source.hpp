#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cartsel/loh.hpp"
#include "cartsel/value.hpp"

namespace cartsel {

/// Something that hands out layers of a layer-ordered heap, in index order,
/// possibly generating them on demand. Indices are 0-based. A layer never
/// changes once it is available.
template <Value T> class LayerSource {
public:
  virtual ~LayerSource() = default;

  /// Makes layers 0..i available. Returns false iff layer i can never exist.
  virtual bool ensure(std::size_t i) = 0;
  /// False only when layer i is known never to exist.
  virtual bool can_ever(std::size_t i) const = 0;
  virtual std::size_t available() const = 0;

  /// Requires i < available().
  virtual std::span<const T> layer(std::size_t i) const = 0;
  virtual T layer_min(std::size_t i) const = 0;
  virtual T layer_max(std::size_t i) const = 0;

  std::optional<std::span<const T>> peek_layer(std::size_t i) const {
    if (i >= available())
      return std::nullopt;
    return layer(i);
  }
};

/// Wraps one LOHified input array. Exposing a layer is O(1); the per-layer
/// extremes are computed once at construction.
template <Value T> class LeafSource final : public LayerSource<T> {
public:
  explicit LeafSource(LayerOrderedHeap<T> heap) : heap_(std::move(heap)) {
    for (std::size_t i = 0; i < heap_.layer_count(); ++i) {
      const auto l = heap_.layer(i);
      const auto [mn, mx] = std::minmax_element(l.begin(), l.end());
      mins_.push_back(*mn);
      maxs_.push_back(*mx);
    }
  }

  bool ensure(std::size_t i) override {
    if (i >= heap_.layer_count())
      return false;
    exposed_ = std::max(exposed_, i + 1);
    return true;
  }
  bool can_ever(std::size_t i) const override {
    return i < heap_.layer_count();
  }
  std::size_t available() const override { return exposed_; }

  std::span<const T> layer(std::size_t i) const override {
    return heap_.layer(i);
  }
  T layer_min(std::size_t i) const override { return mins_[i]; }
  T layer_max(std::size_t i) const override { return maxs_[i]; }

  const LayerOrderedHeap<T> &heap() const noexcept { return heap_; }

  /// Number of input values the parent has been given access to.
  std::size_t values_exposed() const noexcept {
    return exposed_ == 0 ? 0 : heap_.layer_ends()[exposed_ - 1];
  }

private:
  LayerOrderedHeap<T> heap_;
  std::vector<T> mins_, maxs_;
  std::size_t exposed_ = 0;
};

} // namespace cartsel
