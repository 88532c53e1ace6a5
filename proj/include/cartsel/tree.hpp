#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cartsel/error.hpp"
#include "cartsel/loh.hpp"
#include "cartsel/pairwise.hpp"
#include "cartsel/rank.hpp"
#include "cartsel/select.hpp"
#include "cartsel/source.hpp"
#include "cartsel/stats.hpp"
#include "cartsel/value.hpp"

namespace cartsel {

struct TreeConfig {
  Rank rank{11, 10};
  Mode mode = Mode::standard;
  bool sorted_output = false;
  Proposal proposal = Proposal::deferred;
};

/// Internal node: generates its own layer-ordered heap one layer at a time by
/// pairwise selection over the heaps of its two children. Each layer lives in
/// its own array.
template <Value T> class PairwiseNode final : public LayerSource<T> {
public:
  PairwiseNode(LayerSource<T> &left, LayerSource<T> &right, const Rank &rank,
               Mode mode, Proposal proposal)
      : selector_(left, right, proposal), schedule_(rank), mode_(mode) {}

  bool ensure(std::size_t i) override {
    while (layers_.size() <= i) {
      if (exhausted_)
        return false;
      auto layer = selector_.next_layer(schedule_[layers_.size()], mode_);
      if (!layer) {
        exhausted_ = true;
        return false;
      }
      const auto [mn, mx] = std::minmax_element(layer->begin(), layer->end());
      mins_.push_back(*mn);
      maxs_.push_back(*mx);
      layers_.push_back(std::move(*layer));
    }
    return true;
  }
  bool can_ever(std::size_t i) const override {
    return i < layers_.size() || !exhausted_;
  }
  std::size_t available() const override { return layers_.size(); }

  std::span<const T> layer(std::size_t i) const override { return layers_[i]; }
  T layer_min(std::size_t i) const override { return mins_[i]; }
  T layer_max(std::size_t i) const override { return maxs_[i]; }

  const PairwiseSelector<T> &selector() const noexcept { return selector_; }
  std::size_t scheduled_size(std::size_t i) { return schedule_[i]; }

private:
  PairwiseSelector<T> selector_;
  LayerSchedule schedule_;
  Mode mode_;
  std::vector<std::vector<T>> layers_;
  std::vector<T> mins_, maxs_;
  bool exhausted_ = false;
};

/// Balanced binary tree of pairwise selection nodes over m inputs. The left
/// subtree of a node covers ceil(m/2) inputs, which keeps the height at
/// ceil(log2 m). Nothing beyond LOHifying the leaves happens until select_k.
template <Value T> class CartesianProductTree {
public:
  CartesianProductTree(std::vector<std::vector<T>> inputs, TreeConfig config)
      : config_(config) {
    if (inputs.empty())
      throw Error(ErrorKind::empty_input, "build_tree: no inputs");
    for (std::size_t i = 0; i < inputs.size(); ++i)
      if (inputs[i].empty())
        throw Error(ErrorKind::empty_input,
                    "build_tree: input " + std::to_string(i) + " is empty");
    validate_inputs<T>(inputs);
    std::vector<std::size_t> sizes;
    for (const auto &xs : inputs)
      sizes.push_back(xs.size());
    total_ = saturating_product(sizes);
    root_ = build(inputs, 0, inputs.size(), 0);
  }

  CartesianProductTree(const CartesianProductTree &) = delete;
  CartesianProductTree &operator=(const CartesianProductTree &) = delete;
  CartesianProductTree(CartesianProductTree &&) noexcept = default;
  CartesianProductTree &operator=(CartesianProductTree &&) noexcept = default;

  /// The k smallest values of X1 + ... + Xm. The root generates layers until
  /// they hold at least k values, then one selection trims the pool to k.
  /// Calls may repeat; layers generated earlier are reused.
  std::vector<T> select_k(std::size_t k) {
    if (k > total_)
      throw Error(ErrorKind::contract,
                  "select_k: k=" + std::to_string(k) +
                      " exceeds the product size " + std::to_string(total_));
    if (k == 0)
      return {};
    std::size_t gathered = 0, layers = 0;
    while (gathered < k && root_->ensure(layers))
      gathered += root_->layer(layers++).size();

    std::vector<T> pool;
    pool.reserve(gathered);
    for (std::size_t i = 0; i < layers; ++i) {
      const auto l = root_->layer(i);
      pool.insert(pool.end(), l.begin(), l.end());
    }
    root_pool_size_ = pool.size();
    linear_select(std::span<T>(pool), k);
    pool.resize(k);
    if (config_.sorted_output)
      std::sort(pool.begin(), pool.end());
    return pool;
  }

  SelectionStats stats() const {
    SelectionStats s;
    for (const auto *node : internals_) {
      const auto &ns = node->selector().stats();
      s.values_generated += ns.values_generated;
      s.tuple_pops += ns.tuple_pops;
      s.tuple_pushes += ns.tuple_pushes;
      s.deferred_proposals += ns.deferred_proposals;
      s.layers_emitted.push_back(ns.layers_emitted);
    }
    for (const auto *leaf : leaves_)
      s.leaf_values_exposed += leaf->values_exposed();
    s.root_pool_size = root_pool_size_;
    return s;
  }

  std::size_t input_count() const noexcept { return leaves_.size(); }
  std::size_t internal_count() const noexcept { return internals_.size(); }
  std::size_t height() const noexcept { return height_; }
  std::size_t total_size() const noexcept { return total_; }
  const TreeConfig &config() const noexcept { return config_; }
  std::span<LeafSource<T> *const> leaves() const noexcept { return leaves_; }
  std::span<PairwiseNode<T> *const> internals() const noexcept {
    return internals_;
  }
  LayerSource<T> &root() noexcept { return *root_; }

private:
  LayerSource<T> *build(std::vector<std::vector<T>> &inputs, std::size_t lo,
                        std::size_t hi, std::size_t depth) {
    height_ = std::max(height_, depth);
    if (hi - lo == 1) {
      auto leaf = std::make_unique<LeafSource<T>>(
          lohify(std::move(inputs[lo]), config_.rank));
      leaves_.push_back(leaf.get());
      return own(std::move(leaf));
    }
    const std::size_t mid = lo + (hi - lo + 1) / 2;
    auto *left = build(inputs, lo, mid, depth + 1);
    auto *right = build(inputs, mid, hi, depth + 1);
    auto node = std::make_unique<PairwiseNode<T>>(
        *left, *right, config_.rank, config_.mode, config_.proposal);
    internals_.push_back(node.get());
    return own(std::move(node));
  }

  template <typename Node> LayerSource<T> *own(std::unique_ptr<Node> node) {
    auto *raw = node.get();
    nodes_.push_back(std::move(node));
    return raw;
  }

  TreeConfig config_;
  std::vector<std::unique_ptr<LayerSource<T>>> nodes_;
  std::vector<LeafSource<T> *> leaves_;
  std::vector<PairwiseNode<T> *> internals_;
  LayerSource<T> *root_ = nullptr;
  std::size_t total_ = 0;
  std::size_t height_ = 0;
  std::size_t root_pool_size_ = 0;
};

/// Builds the tree; inputs are LOHified here.
template <Value T>
CartesianProductTree<T> build_tree(std::vector<std::vector<T>> inputs,
                                   TreeConfig config = {}) {
  return CartesianProductTree<T>(std::move(inputs), config);
}

} // namespace cartsel
