#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"

#include "cartsel/select.hpp"
#include "test_util.hpp"

using cartsel::linear_select;
using cartsel::partition_by_value;
using cartsel::test::sorted;

namespace {

template <typename T>
bool is_split_at(const std::vector<T> &xs, std::size_t k) {
  if (k == 0 || k == xs.size())
    return true;
  return *std::max_element(xs.begin(), xs.begin() + k) <=
         *std::min_element(xs.begin() + k, xs.end());
}

} // namespace

TEST_CASE("linear_select examples") {
  std::vector<int> a{4, 1, 3, 2};
  auto split = linear_select(std::span<int>(a), 2);
  CHECK(sorted(std::vector<int>(split.lower.begin(), split.lower.end())) ==
        std::vector<int>{1, 2});
  CHECK(split.upper.size() == 2);

  std::vector<int> b{7, 7, 7};
  split = linear_select(std::span<int>(b), 2);
  CHECK(std::vector<int>(split.lower.begin(), split.lower.end()) ==
        std::vector<int>{7, 7});

  std::vector<int> c{3, 1};
  CHECK(linear_select(std::span<int>(c), 0).lower.empty());
  CHECK_THROWS_AS(linear_select(std::span<int>(c), 3), cartsel::Error);
}

TEST_CASE("linear_select against sort on seeded uniform values") {
  std::mt19937_64 rng(100);
  std::vector<double> xs(1000);
  for (auto &x : xs)
    x = std::uniform_real_distribution<double>(0, 1)(rng);
  const auto full = sorted(xs);
  linear_select(std::span<double>(xs), 100);
  CHECK(sorted(std::vector<double>(xs.begin(), xs.begin() + 100)) ==
        std::vector<double>(full.begin(), full.begin() + 100));
}

TEST_CASE("linear_select prefix is the sorted prefix for every k, |pool| <= 64") {
  std::mt19937_64 rng(7);
  for (std::size_t n = 1; n <= 64; ++n) {
    for (const std::int64_t range : {2, 1000}) {
      const auto base = cartsel::test::random_ints(rng, n, range);
      const auto full = sorted(base);
      for (std::size_t k = 0; k <= n; ++k) {
        auto xs = base;
        linear_select(std::span<std::int64_t>(xs), k);
        REQUIRE(is_split_at(xs, k));
        REQUIRE(sorted(std::vector<std::int64_t>(xs.begin(), xs.begin() + k)) ==
                std::vector<std::int64_t>(full.begin(), full.begin() + k));
        REQUIRE(sorted(xs) == full);
      }
    }
  }
}

TEST_CASE("linear_select stays correct on adversarial patterns") {
  const std::size_t n = 20000;
  std::vector<std::vector<int>> inputs;
  std::vector<int> asc(n), desc(n), organ(n), few(n);
  std::iota(asc.begin(), asc.end(), 0);
  std::iota(desc.rbegin(), desc.rend(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    organ[i] = static_cast<int>(i < n / 2 ? i : n - i);
    few[i] = static_cast<int>(i % 3);
  }
  for (auto &xs : {asc, desc, organ, few}) {
    for (const std::size_t k : {std::size_t{1}, n / 3, n / 2, n - 1}) {
      auto ys = xs;
      linear_select(std::span<int>(ys), k);
      CHECK(is_split_at(ys, k));
    }
  }
}

TEST_CASE("median of medians lands in the middle 40%") {
  std::mt19937_64 rng(5);
  auto xs = cartsel::test::random_ints(rng, 5000, 1 << 30);
  const auto full = sorted(xs);
  auto less = std::less<>{};
  const auto pivot = cartsel::detail::median_of_medians(std::span<std::int64_t>(xs), less);
  const auto rank = static_cast<std::size_t>(
      std::lower_bound(full.begin(), full.end(), pivot) - full.begin());
  CHECK(rank >= 3 * full.size() / 10);
  CHECK(rank <= 7 * full.size() / 10);
}

TEST_CASE("linear_select comparison count is linear") {
  std::mt19937_64 rng(3);
  for (const std::size_t n : {1u << 12, 1u << 16}) {
    auto xs = cartsel::test::random_ints(rng, n, 1 << 30);
    std::size_t comparisons = 0;
    linear_select(std::span<std::int64_t>(xs), n / 2,
                  [&](std::int64_t a, std::int64_t b) {
                    ++comparisons;
                    return a < b;
                  });
    CHECK(is_split_at(xs, n / 2));
    CHECK(comparisons < 12 * n);
  }
}

TEST_CASE("partition_by_value") {
  std::vector<int> a{5, 1, 6, 2};
  auto split = partition_by_value(std::span<int>(a), 2);
  CHECK(sorted(std::vector<int>(split.lower.begin(), split.lower.end())) ==
        std::vector<int>{1, 2});
  CHECK(sorted(std::vector<int>(split.upper.begin(), split.upper.end())) ==
        std::vector<int>{5, 6});

  std::vector<int> b{3, 3};
  split = partition_by_value(std::span<int>(b), 3);
  CHECK(split.lower.size() == 2);
  CHECK(split.upper.empty());

  std::mt19937_64 rng(11);
  auto pool = cartsel::test::random_ints(rng, 501, 100);
  const auto median = sorted(pool)[250];
  const auto expected = static_cast<std::size_t>(
      std::count_if(pool.begin(), pool.end(),
                    [&](std::int64_t x) { return x <= median; }));
  auto counted = partition_by_value(std::span<std::int64_t>(pool), median);
  CHECK(counted.lower.size() == expected);
  for (auto x : counted.lower)
    CHECK(x <= median);
  for (auto x : counted.upper)
    CHECK(x > median);
}
