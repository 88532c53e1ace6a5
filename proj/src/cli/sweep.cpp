#include "cli/sweep.hpp"

#include <algorithm>
#include <exception>
#include <random>

#include "cartsel/oracle.hpp"
#include "cartsel/select.hpp"
#include "cartsel/tree.hpp"

namespace cartsel::cli {

std::string SweepFailure::replay() const {
  return "seed=" + std::to_string(instance_seed) + " n=" + std::to_string(n) +
         " m=" + std::to_string(m) + " k=" + std::to_string(k) +
         " mode=" + to_string(mode);
}

std::uint64_t sweep_instance_seed(std::uint64_t seed, std::size_t n,
                                  std::size_t m, std::size_t trial) {
  std::uint64_t state = seed;
  for (const std::uint64_t part : {std::uint64_t{n}, std::uint64_t{m},
                                   std::uint64_t{trial}})
    state = detail::splitmix64(state) ^ part;
  return detail::splitmix64(state);
}

std::vector<std::vector<std::int64_t>>
sweep_instance(std::uint64_t instance_seed, std::size_t n, std::size_t m,
               std::size_t trial) {
  std::mt19937_64 engine(instance_seed);
  const std::uint64_t range = trial % 2 == 0 ? 4 : (std::uint64_t{1} << 20);
  std::vector<std::vector<std::int64_t>> arrays(m, std::vector<std::int64_t>(n));
  for (auto &row : arrays)
    for (auto &x : row)
      x = static_cast<std::int64_t>(engine() % range);
  return arrays;
}

SweepReport run_oracle_sweep(const SweepOptions &options) {
  SweepReport report;
  for (std::size_t n = 1; n <= options.n_max; ++n) {
    for (std::size_t m = 1; m <= options.m_max; ++m) {
      for (std::size_t trial = 0; trial < options.trials; ++trial) {
        const auto iseed = sweep_instance_seed(options.seed, n, m, trial);
        const auto inputs = sweep_instance(iseed, n, m, trial);
        std::size_t total = 1;
        for (std::size_t i = 0; i < m; ++i)
          total *= n;
        const auto expected = oracle::brute_multi<std::int64_t>(inputs, total);

        std::vector<std::size_t> ks{1, 2, (total + 1) / 2, total};
        std::mt19937_64 kgen(iseed ^ 0xA5A5A5A5ull);
        for (std::size_t r = 0; r < options.random_ks; ++r)
          ks.push_back(1 + kgen() % total);
        ks.erase(std::remove_if(ks.begin(), ks.end(),
                                [&](std::size_t k) { return k > total; }),
                 ks.end());

        for (const std::size_t k : ks) {
          std::vector<std::int64_t> answers[2];
          for (const Mode mode : {Mode::standard, Mode::wobbly}) {
            ++report.cases;
            auto &got = answers[mode == Mode::wobbly];
            try {
              auto tree = build_tree(inputs, {options.rank, mode, true});
              got = tree.select_k(k);
            } catch (const std::exception &e) {
              report.failures.push_back(
                  {iseed, n, m, k, mode, std::string("threw: ") + e.what()});
              continue;
            }
            if (got.size() == k &&
                std::equal(got.begin(), got.end(), expected.begin())) {
              ++report.passed;
            } else {
              report.failures.push_back(
                  {iseed, n, m, k, mode, "multiset differs from brute force"});
            }
          }
          if (answers[0] != answers[1])
            ++report.mode_disagreements;
        }
      }
    }
  }
  return report;
}

} // namespace cartsel::cli
