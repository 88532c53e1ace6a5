#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cli/instance.hpp"

namespace cartsel::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int failure = 1;     // verification mismatch or I/O error
inline constexpr int parse_error = 2; // malformed instance file
inline constexpr int k_range = 3;     // k outside [0, product size]
} // namespace exit_code

struct GenOptions {
  std::size_t n = 32;
  std::size_t m = 2;
  std::uint64_t seed = 1;
  std::string dist = "int";
  std::string out; // empty: standard output
};

struct SelectOptions {
  std::string input;
  std::size_t k = 1;
  double alpha = 1.1;
  std::string mode = "standard";
  bool sorted = false;
  std::string output; // empty: standard output
};

struct VerifyOptions {
  std::size_t n_max = 8;
  std::size_t m_max = 5;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  double alpha = 1.1;
};

struct BenchOptions {
  std::size_t n = 256;
  std::size_t m = 5;
  double alpha = 1.1;
  std::vector<std::size_t> ks;
  std::vector<std::string> modes{"standard", "wobbly"};
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::string dist = "int";
  std::string csv; // empty: standard output
  std::size_t cap = std::size_t{1} << 24;
};

inline constexpr const char *bench_csv_header =
    "mode,n,m,alpha,k,trial,seed,runtime_seconds,runtime_excl_load_seconds,"
    "values_generated,root_pool_size";

int cmd_gen(const GenOptions &options, std::ostream &out, std::ostream &err);
int cmd_select(const SelectOptions &options, std::ostream &out,
               std::ostream &err);
int cmd_verify(const VerifyOptions &options, std::ostream &out,
               std::ostream &err);
int cmd_bench(const BenchOptions &options, std::ostream &out,
              std::ostream &err);

/// "a,b,,c" -> {"a", "b", "c"}.
std::vector<std::string> split_list(const std::string &text);
/// "4,8,16" -> {4, 8, 16}.
std::vector<std::size_t> parse_k_list(const std::string &text);
/// "2:20" -> {2^2, 2^3, ..., 2^20}.
std::vector<std::size_t> parse_k_range(const std::string &text);

} // namespace cartsel::cli
