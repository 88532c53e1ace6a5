#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cartsel::cli {

template <typename T> using Arrays = std::vector<std::vector<T>>;

/// Parsed instance file. Integer profile when every token is an integer,
/// floating profile otherwise.
using Instance = std::variant<Arrays<std::int64_t>, Arrays<double>>;

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// One array per line, values separated by spaces or tabs; '#' lines and
/// blank lines are skipped.
Instance parse_instance(std::istream &in);
Instance read_instance(const std::string &path);

enum class Distribution {
  uniform_int,  // integers in [0, 2^30): top 30 bits of one mt19937_64 draw
  uniform_real, // reals in [0, 1): top 53 bits of one draw, times 2^-53
};

Distribution parse_distribution(std::string_view name);

/// m arrays of n values from mt19937_64 seeded with `seed`, drawn row by row.
Instance generate_instance(std::size_t n, std::size_t m, std::uint64_t seed,
                           Distribution dist);

void write_instance(std::ostream &out, const Instance &instance);

std::string format_value(std::int64_t x);
std::string format_value(double x);

} // namespace cartsel::cli
