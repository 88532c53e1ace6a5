#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cartsel/rank.hpp"
#include "cartsel/stats.hpp"

namespace cartsel::cli {

struct SweepOptions {
  std::size_t n_max = 8;
  std::size_t m_max = 5;
  std::size_t trials = 50; // seeded instances per (n, m)
  std::uint64_t seed = 1;
  std::size_t random_ks = 10;
  Rank rank{11, 10};
};

/// One (instance, k, mode) check that disagreed with the brute-force answer.
struct SweepFailure {
  std::uint64_t instance_seed;
  std::size_t n, m, k;
  Mode mode;
  std::string detail;

  std::string replay() const;
};

struct SweepReport {
  std::size_t cases = 0;
  std::size_t passed = 0;
  // (instance, k) pairs where standard and wobbly returned different multisets.
  std::size_t mode_disagreements = 0;
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty() && mode_disagreements == 0; }
};

/// Instance used for (seed, n, m, trial): integers, every other trial drawn
/// from a tiny range so ties are common.
std::vector<std::vector<std::int64_t>>
sweep_instance(std::uint64_t instance_seed, std::size_t n, std::size_t m,
               std::size_t trial);

std::uint64_t sweep_instance_seed(std::uint64_t seed, std::size_t n,
                                  std::size_t m, std::size_t trial);

/// For every n <= n_max, m <= m_max and trial: checks select_k against the
/// sorted exhaustive enumeration for k in {1, 2, ceil(total/2), total} plus
/// random_ks random k, in both modes, each on a freshly built tree.
SweepReport run_oracle_sweep(const SweepOptions &options);

} // namespace cartsel::cli
