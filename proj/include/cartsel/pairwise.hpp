#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cartsel/error.hpp"
#include "cartsel/loh.hpp"
#include "cartsel/select.hpp"
#include "cartsel/source.hpp"
#include "cartsel/stats.hpp"
#include "cartsel/value.hpp"

namespace cartsel {

/// Layer product A(u) + B(v), with 1-based layer indices.
struct LayerProductRef {
  std::size_t u = 1;
  std::size_t v = 1;

  friend auto operator<=>(const LayerProductRef &, const LayerProductRef &) =
      default;
};

/// Heap entry for the min or max corner of a layer product. A deferred min
/// tuple carries a lower bound instead of the exact minimum because a child
/// has not generated the layer yet.
template <Value T> struct ProductTuple {
  T value;
  LayerProductRef ref;
  bool is_max = false;
  bool deferred = false;

  friend bool operator==(const ProductTuple &, const ProductTuple &) = default;
};

/// Ascending by value; min tuples before max tuples of equal value; then
/// (u, v) lexicographic; a deferred tuple before the exact one.
template <Value T>
bool tuple_less(const ProductTuple<T> &a, const ProductTuple<T> &b) {
  if (a.value < b.value)
    return true;
  if (b.value < a.value)
    return false;
  if (a.is_max != b.is_max)
    return !a.is_max;
  if (a.ref != b.ref)
    return a.ref < b.ref;
  return a.deferred && !b.deferred;
}

/// When a proposed successor needs a child layer that does not exist yet.
enum class Proposal {
  eager,    // the child generates it right away; unreachable refs are dropped
  deferred, // push a lower-bound tuple; generate only if it reaches the top
};

/// Refs proposed when the min tuple of `ref` pops: (u,2v), (u,2v+1), and for
/// v = 1 also (2u,1), (2u+1,1). Every ref other than (1,1) has exactly one
/// proposer, so nothing is pushed twice.
inline std::vector<LayerProductRef> successors(LayerProductRef ref) {
  std::vector<LayerProductRef> out{{ref.u, 2 * ref.v}, {ref.u, 2 * ref.v + 1}};
  if (ref.v == 1) {
    out.push_back({2 * ref.u, 1});
    out.push_back({2 * ref.u + 1, 1});
  }
  return out;
}

/// Incremental selection on A + B where A and B are layer sources. Each call
/// to next_layer() emits the next layer of the product's own layer-ordered
/// heap. Values generated but not yet emitted stay in the carry buffer, so a
/// layer product is expanded exactly once over the lifetime of the selector.
template <Value T> class PairwiseSelector {
public:
  PairwiseSelector(LayerSource<T> &a, LayerSource<T> &b,
                   Proposal proposal = Proposal::eager)
      : a_(a), b_(b), proposal_(proposal) {}

  PairwiseSelector(const PairwiseSelector &) = delete;
  PairwiseSelector &operator=(const PairwiseSelector &) = delete;

  /// Seeds the heap with the min tuple of (1,1).
  void propose_initial() {
    if (!a_.ensure(0) || !b_.ensure(0))
      throw Error(ErrorKind::empty_input,
                  "pairwise selection: a child has no first layer");
    started_ = true;
    push_min({1, 1});
  }

  std::optional<ProductTuple<T>> pop() {
    if (heap_.empty())
      return std::nullopt;
    std::pop_heap(heap_.begin(), heap_.end(), heap_order);
    auto t = heap_.back();
    heap_.pop_back();
    if (!t.deferred)
      ++stats_.tuple_pops;
    return t;
  }

  /// Generates the values of a popped min tuple's layer product into the
  /// carry, pushes its max tuple and proposes its successors. Successors a
  /// child cannot produce are dropped.
  void expand_min(const ProductTuple<T> &t) {
    assert(!t.is_max);
    const auto la = a_.layer(t.ref.u - 1);
    const auto lb = b_.layer(t.ref.v - 1);
    const std::size_t needed = carry_.size() + la.size() * lb.size();
    if (needed > carry_.capacity())
      carry_.reserve(std::max(needed, 2 * carry_.capacity()));
    for (const T &y : lb)
      for (const T &x : la)
        carry_.push_back(x + y);
    stats_.values_generated += la.size() * lb.size();

    push({a_.layer_max(t.ref.u - 1) + b_.layer_max(t.ref.v - 1), t.ref, true});
    for (const auto &next : successors(t.ref)) {
      if (proposal_ == Proposal::eager) {
        if (a_.ensure(next.u - 1) && b_.ensure(next.v - 1))
          push_min(next);
      } else if (a_.can_ever(next.u - 1) && b_.can_ever(next.v - 1)) {
        if (next.u <= a_.available() && next.v <= b_.available()) {
          push_min(next);
        } else {
          push({lower_bound(a_, next.u - 1) + lower_bound(b_, next.v - 1), next,
                false, true});
          ++stats_.deferred_proposals;
        }
      }
    }
  }

  /// A popped deferred tuple: asks the children for the layers and pushes
  /// the exact min tuple, or drops the ref if a child runs out.
  void resolve_deferred(const ProductTuple<T> &t) {
    assert(t.deferred);
    if (a_.ensure(t.ref.u - 1) && b_.ensure(t.ref.v - 1))
      push_min(t.ref);
  }

  /// Records a popped max tuple: every value of its product is now known to
  /// be <= t.value.
  void absorb_max(const ProductTuple<T> &t) {
    assert(t.is_max);
    const auto size = a_.layer(t.ref.u - 1).size() * b_.layer(t.ref.v - 1).size();
    selectable_ += static_cast<std::int64_t>(size);
    bound_ = t.value;
    max_popped_.push_back(t.ref);
  }

  /// Emits the next layer: exactly min(target, remaining) values in standard
  /// mode; in wobbly mode every carried value <= the last max tuple popped,
  /// which is at least that many. nullopt once the product is used up.
  std::optional<std::vector<T>> next_layer(std::size_t target, Mode mode) {
    if (target == 0)
      throw Error(ErrorKind::contract, "next_layer: target must be >= 1");
    if (!started_)
      propose_initial();

    while (selectable_ < static_cast<std::int64_t>(target)) {
      auto t = pop();
      if (!t)
        break;
      if (t->is_max)
        absorb_max(*t);
      else if (t->deferred)
        resolve_deferred(*t);
      else
        expand_min(*t);
    }
    if (carry_.empty())
      return std::nullopt;

    std::span<T> pool(carry_);
    std::size_t take;
    if (mode == Mode::standard) {
      take = linear_select(pool, std::min(target, carry_.size())).lower.size();
    } else if (selectable_ < static_cast<std::int64_t>(target)) {
      take = carry_.size(); // heap ran dry: the rest is the tail
    } else {
      take = partition_by_value(pool, *bound_).lower.size();
    }

    std::vector<T> layer;
    if (2 * take >= carry_.size()) {
      std::vector<T> rest(carry_.begin() + take, carry_.end());
      carry_.resize(take);
      layer = std::exchange(carry_, std::move(rest));
    } else {
      layer.assign(carry_.begin(), carry_.begin() + take);
      carry_.erase(carry_.begin(), carry_.begin() + take);
    }
    selectable_ -= static_cast<std::int64_t>(take);
    max_popped_.clear();
    ++stats_.layers_emitted;
    return layer;
  }

  bool exhausted() const noexcept {
    return started_ && heap_.empty() && carry_.empty();
  }

  /// Heap contents in pop order.
  std::vector<ProductTuple<T>> heap_snapshot() const {
    auto out = heap_;
    std::sort(out.begin(), out.end(), tuple_less<T>);
    return out;
  }

  std::span<const T> carry() const noexcept { return carry_; }
  /// Refs whose max tuple popped since the last emission.
  std::span<const LayerProductRef> max_popped() const noexcept {
    return max_popped_;
  }
  const NodeStats &stats() const noexcept { return stats_; }

private:
  static bool heap_order(const ProductTuple<T> &a, const ProductTuple<T> &b) {
    return tuple_less(b, a);
  }

  // Every value of layer i and later is >= this.
  static T lower_bound(const LayerSource<T> &x, std::size_t i) {
    return i < x.available() ? x.layer_min(i) : x.layer_max(x.available() - 1);
  }

  void push_min(LayerProductRef ref) {
    push({a_.layer_min(ref.u - 1) + b_.layer_min(ref.v - 1), ref, false});
  }

  void push(ProductTuple<T> t) {
#ifndef NDEBUG
    if (!t.deferred) {
      const bool fresh = pushed_.insert({t.ref, t.is_max}).second;
      assert(fresh && "layer product proposed twice");
    }
#endif
    heap_.push_back(t);
    std::push_heap(heap_.begin(), heap_.end(), heap_order);
    if (!t.deferred)
      ++stats_.tuple_pushes;
  }

  LayerSource<T> &a_;
  LayerSource<T> &b_;
  Proposal proposal_;
  std::vector<ProductTuple<T>> heap_;
  std::vector<T> carry_;
  // Max-popped product sizes minus values emitted. Lower bound on the number
  // of carried values <= bound_; may go negative after a wobbly emission.
  std::int64_t selectable_ = 0;
  std::optional<T> bound_;
  std::vector<LayerProductRef> max_popped_;
  NodeStats stats_;
  bool started_ = false;
#ifndef NDEBUG
  std::set<std::pair<LayerProductRef, bool>> pushed_;
#endif
};

/// The k smallest values of A + B, in no particular order.
template <Value T>
std::vector<T> select_pairwise(std::vector<T> a, std::vector<T> b,
                               std::size_t k, const Rank &rank) {
  if (a.empty() || b.empty())
    throw Error(ErrorKind::empty_input, "select_pairwise: empty input");
  const std::vector<std::vector<T>> both{a, b};
  validate_inputs<T>(both);
  const std::size_t total = saturating_product(
      std::vector<std::size_t>{a.size(), b.size()});
  if (k == 0 || k > total)
    throw Error(ErrorKind::contract, "select_pairwise: k=" + std::to_string(k) +
                                         " outside [1, " +
                                         std::to_string(total) + "]");
  LeafSource<T> la(lohify(std::move(a), rank));
  LeafSource<T> lb(lohify(std::move(b), rank));
  PairwiseSelector<T> selector(la, lb);
  return *selector.next_layer(k, Mode::standard);
}

} // namespace cartsel
