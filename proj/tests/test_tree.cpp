#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"

#include "cartsel/guard.hpp"
#include "cartsel/oracle.hpp"
#include "cartsel/tree.hpp"
#include "test_util.hpp"

using namespace cartsel;
using cartsel::test::random_ints;
using cartsel::test::sorted;
using Arrays = std::vector<std::vector<std::int64_t>>;

namespace {

Arrays random_arrays(std::mt19937_64 &rng, std::size_t n, std::size_t m,
                     std::int64_t range) {
  Arrays xs;
  for (std::size_t i = 0; i < m; ++i)
    xs.push_back(random_ints(rng, n, range));
  return xs;
}

} // namespace

TEST_CASE("tree shape") {
  for (const auto &[m, internal, height] :
       {std::tuple{1u, 0u, 0u}, {2u, 1u, 1u}, {4u, 3u, 2u}, {5u, 4u, 3u},
        {8u, 7u, 3u}, {9u, 8u, 4u}, {256u, 255u, 8u}}) {
    auto tree = build_tree(Arrays(m, std::vector<std::int64_t>{1, 2}));
    CHECK(tree.input_count() == m);
    CHECK(tree.internal_count() == internal);
    CHECK(tree.height() == height);
    CHECK(tree.height() ==
          static_cast<std::size_t>(std::ceil(std::log2(double(m)))));
  }
}

TEST_CASE("build_tree rejects empty inputs and does no selection work") {
  try {
    build_tree(Arrays{{1}, {}, {2}});
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::empty_input);
    CHECK(std::string(e.what()).find("input 1") != std::string::npos);
  }
  CHECK_THROWS_AS(build_tree(Arrays{}), Error);
  CHECK_THROWS_AS(
      build_tree(Arrays{{std::numeric_limits<std::int64_t>::max()}, {1}}),
      Error);

  std::mt19937_64 rng(1);
  auto tree = build_tree(random_arrays(rng, 16, 6, 100));
  const auto stats = tree.stats();
  CHECK(stats.tuple_pops == 0);
  CHECK(stats.tuple_pushes == 0);
  CHECK(stats.values_generated == 0);
  CHECK(stats.root_pool_size == 0);
  CHECK(stats.leaf_values_exposed == 0);
}

TEST_CASE("select_k examples") {
  auto tree = build_tree(Arrays{{0, 1}, {0, 2}, {0, 4}});
  CHECK(sorted(tree.select_k(3)) == std::vector<std::int64_t>{0, 1, 2});
  CHECK(tree.select_k(0).empty());
  CHECK_THROWS_AS(tree.select_k(9), Error);

  std::mt19937_64 rng(8);
  const auto inputs = random_arrays(rng, 8, 4, 1000);
  std::int64_t min_sum = 0;
  for (const auto &xs : inputs)
    min_sum += *std::min_element(xs.begin(), xs.end());
  auto t1 = build_tree(inputs);
  CHECK(t1.select_k(1) == std::vector<std::int64_t>{min_sum});
  CHECK(t1.stats().root_pool_size >= 1);

  auto t2 = build_tree(inputs, {Rank(11, 10), Mode::standard, true});
  CHECK(t2.select_k(4096) == oracle::brute_multi<std::int64_t>(inputs, 4096));

  auto single = build_tree(Arrays{{5, 3, 9, 1}}, {Rank(2, 1), Mode::wobbly, true});
  CHECK(single.select_k(3) == std::vector<std::int64_t>{1, 3, 5});
}

TEST_CASE("select_k matches brute force in both modes") {
  std::mt19937_64 rng(99);
  for (const Mode mode : {Mode::standard, Mode::wobbly})
  for (const Proposal proposal : {Proposal::eager, Proposal::deferred}) {
    for (std::size_t m = 1; m <= 5; ++m) {
      for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 4; ++trial) {
          const auto inputs = random_arrays(rng, n, m, trial % 2 ? 3 : 1 << 20);
          const std::size_t total = static_cast<std::size_t>(std::pow(n, m));
          const auto all = oracle::brute_multi<std::int64_t>(inputs, total);
          for (const std::size_t k :
               {std::size_t{1}, std::min<std::size_t>(2, total), (total + 1) / 2,
                total, 1 + rng() % total}) {
            auto tree = build_tree(inputs, {Rank(11, 10), mode, true, proposal});
            REQUIRE(tree.select_k(k) ==
                    std::vector<std::int64_t>(all.begin(), all.begin() + k));
          }
        }
      }
    }
  }
}

TEST_CASE("deferred and eager proposals build identical layers") {
  std::mt19937_64 rng(12);
  for (const Mode mode : {Mode::standard, Mode::wobbly}) {
    for (int trial = 0; trial < 6; ++trial) {
      const auto inputs = random_arrays(rng, 12, 6, trial % 2 ? 5 : 1 << 30);
      auto eager = build_tree(inputs, {Rank(11, 10), mode, true, Proposal::eager});
      auto deferred =
          build_tree(inputs, {Rank(11, 10), mode, true, Proposal::deferred});
      const std::size_t k = 1 + rng() % 5000;
      REQUIRE(eager.select_k(k) == deferred.select_k(k));
      for (std::size_t j = 0; j < eager.internal_count(); ++j) {
        auto *e = eager.internals()[j];
        auto *d = deferred.internals()[j];
        const std::size_t common = std::min(e->available(), d->available());
        for (std::size_t i = 0; i < common; ++i)
          REQUIRE(std::vector<std::int64_t>(e->layer(i).begin(), e->layer(i).end()) ==
                  std::vector<std::int64_t>(d->layer(i).begin(), d->layer(i).end()));
      }
      CHECK(deferred.stats().values_generated <= eager.stats().values_generated);
      CHECK(deferred.stats().leaf_values_exposed <= eager.stats().leaf_values_exposed);
    }
  }
}

TEST_CASE("floating-point profile") {
  std::mt19937_64 rng(4);
  std::vector<std::vector<double>> inputs(4, std::vector<double>(7));
  for (auto &xs : inputs)
    for (auto &x : xs)
      x = static_cast<double>(static_cast<int>(rng() % 4001) - 2000) / 64.0;
  auto tree = build_tree(inputs, {Rank(3, 2), Mode::standard, true});
  // Multiples of 1/64 add exactly, so summation order does not matter.
  CHECK(tree.select_k(500) == oracle::brute_multi<double>(inputs, 500));

  inputs[2][3] = std::nan("");
  CHECK_THROWS_AS(build_tree(inputs), Error);
}

TEST_CASE("repeated select_k calls reuse layers") {
  std::mt19937_64 rng(21);
  const auto inputs = random_arrays(rng, 10, 4, 50);
  const auto all = oracle::brute_multi<std::int64_t>(inputs, 10000);
  for (const Mode mode : {Mode::standard, Mode::wobbly}) {
    auto tree = build_tree(inputs, {Rank(11, 10), mode, true});
    for (const std::size_t k : {50u, 10u, 700u, 1u, 10000u, 300u}) {
      REQUIRE(tree.select_k(k) ==
              std::vector<std::int64_t>(all.begin(), all.begin() + k));
    }
  }
}

TEST_CASE("select_k(k) is contained in select_k(k+1)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    const auto inputs = random_arrays(rng, 4, 3, trial % 2 ? 4 : 1000);
    for (std::size_t k = 1; k < 64; ++k) {
      auto a = build_tree(inputs, {Rank(11, 10), Mode::standard, true});
      auto b = build_tree(inputs, {Rank(11, 10), Mode::standard, true});
      const auto small = a.select_k(k), large = b.select_k(k + 1);
      REQUIRE(std::includes(large.begin(), large.end(), small.begin(), small.end()));
    }
  }
}

TEST_CASE("internal nodes follow the schedule in standard mode") {
  std::mt19937_64 rng(6);
  auto tree = build_tree(random_arrays(rng, 32, 4, 1 << 30),
                         {Rank(2, 1), Mode::standard, false});
  tree.select_k(500);
  for (auto *node : tree.internals()) {
    REQUIRE(node->available() >= 1);
    CHECK(node->layer(0).size() == 1);
    for (std::size_t i = 0; i + 1 < node->available(); ++i) {
      CHECK(node->layer(i).size() == std::size_t{1} << i);
      CHECK(node->layer_max(i) <= node->layer_min(i + 1));
    }
  }
}

TEST_CASE("wobbly layers blow up on ties, standard layers do not") {
  // All-equal inputs: every generated value is <= any bound, and min tuples
  // pop before max tuples of equal value, so a wobbly node emits its whole
  // product as its first layer.
  const Arrays inputs(4, std::vector<std::int64_t>(8, 3));
  auto wobbly = build_tree(inputs, {Rank(11, 10), Mode::wobbly, false});
  CHECK(wobbly.select_k(2) == std::vector<std::int64_t>{12, 12});
  auto standard = build_tree(inputs, {Rank(11, 10), Mode::standard, false});
  CHECK(standard.select_k(2) == std::vector<std::int64_t>{12, 12});

  const auto ws = wobbly.stats(), ss = standard.stats();
  CHECK(ss.root_pool_size == 3);
  CHECK(ws.root_pool_size == 4096);
  CHECK(wobbly.internals().front()->layer(0).size() == 64);
  CHECK(wobbly.internals().back()->layer(0).size() == 4096);
  CHECK(standard.internals().back()->layer(0).size() == 1);
}

TEST_CASE("wobbly layers exceed the schedule on distinct values") {
  std::mt19937_64 rng(31);
  auto tree = build_tree(random_arrays(rng, 32, 16, 1 << 30),
                         {Rank(11, 10), Mode::wobbly, false});
  tree.select_k(64);
  auto &root = *tree.internals().back();
  std::size_t scheduled = 0, emitted = 0;
  for (std::size_t i = 0; i < root.available(); ++i) {
    CHECK(root.layer(i).size() >= 1);
    if (i + 1 < root.available()) {
      CHECK(root.layer_max(i) <= root.layer_min(i + 1));
    }
    scheduled += root.scheduled_size(i);
    emitted += root.layer(i).size();
  }
  MESSAGE("wobbly root: " << root.available() << " layers, " << emitted
                          << " values vs " << scheduled << " scheduled");
  CHECK(emitted > scheduled);
}

TEST_CASE("k = 1 only touches the first few layers of each leaf") {
  std::mt19937_64 rng(17);
  auto tree = build_tree(random_arrays(rng, 64, 8, 1 << 30));
  tree.select_k(1);
  for (auto *leaf : tree.leaves())
    CHECK(leaf->values_exposed() < 64);
  CHECK(tree.stats().values_generated < 1000);
}

TEST_CASE("root pool stays within the guardrail for n=32, m=256, k=256") {
  const auto guard = GuardConstants::from_env();
  std::mt19937_64 rng(1);
  const auto inputs = random_arrays(rng, 32, 256, 1 << 30);
  auto tree = build_tree(inputs, {Rank(11, 10), Mode::standard, false});
  const auto result = tree.select_k(256);
  CHECK(result.size() == 256);
  const auto pool = tree.stats().root_pool_size;
  MESSAGE("standard root pool " << pool << ", generated "
                                << tree.stats().values_generated);
  // 1 + 2 + ... + 11 + 13 + 15 + 17 + 19 + 21 + 24 + 27 + 30 + 33 = 265
  CHECK(pool == 265);
  CHECK(double(pool) <= guard.limit(1.1, 256));
}
