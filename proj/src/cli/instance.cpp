#include "cli/instance.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

namespace cartsel::cli {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t')
      ++i;
    if (i > start)
      tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T> bool parse_token(std::string_view tok, T &out) {
  const char *first = tok.data();
  if (!tok.empty() && tok.front() == '+')
    ++first;
  const char *last = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

} // namespace

Instance parse_instance(std::istream &in) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (!line.empty() && line.front() == '#')
      continue;
    auto tokens = split_tokens(line);
    if (tokens.empty())
      continue;
    rows.emplace_back(tokens.begin(), tokens.end());
    line_numbers.push_back(number);
  }
  if (rows.empty())
    throw ParseError(number, "no input arrays");

  bool integral = true;
  for (const auto &row : rows)
    for (const auto &tok : row) {
      std::int64_t x;
      integral = integral && parse_token<std::int64_t>(tok, x);
    }

  auto convert = [&]<typename T>(Arrays<T> arrays) -> Instance {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto &out = arrays.emplace_back();
      for (const auto &tok : rows[r]) {
        T x;
        if (!parse_token<T>(tok, x))
          throw ParseError(line_numbers[r], "not a number: '" + tok + "'");
        if constexpr (std::is_floating_point_v<T>)
          if (x != x)
            throw ParseError(line_numbers[r], "NaN is not allowed");
        out.push_back(x);
      }
    }
    return arrays;
  };
  return integral ? convert(Arrays<std::int64_t>{})
                  : convert(Arrays<double>{});
}

Instance read_instance(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

Distribution parse_distribution(std::string_view name) {
  if (name == "int")
    return Distribution::uniform_int;
  if (name == "real")
    return Distribution::uniform_real;
  throw std::invalid_argument("unknown distribution '" + std::string(name) +
                              "' (expected int or real)");
}

Instance generate_instance(std::size_t n, std::size_t m, std::uint64_t seed,
                           Distribution dist) {
  std::mt19937_64 engine(seed);
  if (dist == Distribution::uniform_int) {
    Arrays<std::int64_t> arrays(m, std::vector<std::int64_t>(n));
    for (auto &row : arrays)
      for (auto &x : row)
        x = static_cast<std::int64_t>(engine() >> 34);
    return arrays;
  }
  Arrays<double> arrays(m, std::vector<double>(n));
  for (auto &row : arrays)
    for (auto &x : row)
      x = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return arrays;
}

std::string format_value(std::int64_t x) { return std::to_string(x); }

std::string format_value(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, ptr);
  // Keep reals recognizable as reals when read back.
  if (s.find_first_of(".eEn") == std::string::npos)
    s += ".0";
  return s;
}

void write_instance(std::ostream &out, const Instance &instance) {
  std::visit(
      [&](const auto &arrays) {
        for (const auto &row : arrays) {
          for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
              out << ' ';
            out << format_value(row[i]);
          }
          out << '\n';
        }
      },
      instance);
}

} // namespace cartsel::cli
