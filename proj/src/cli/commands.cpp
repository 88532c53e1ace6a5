#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>
#include <variant>

#include "cartsel/error.hpp"
#include "cartsel/oracle.hpp"
#include "cartsel/tree.hpp"
#include "cli/sweep.hpp"

namespace cartsel::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

Mode parse_mode(const std::string &name) {
  if (name == "standard")
    return Mode::standard;
  if (name == "wobbly")
    return Mode::wobbly;
  throw std::invalid_argument("unknown mode '" + name +
                              "' (expected standard or wobbly)");
}

std::string format_double(double x) {
  std::ostringstream s;
  s.precision(9);
  s << x;
  return s.str();
}

// Writes to `path`, or to `fallback` when the path is empty.
template <typename F>
void with_output(const std::string &path, std::ostream &fallback, F &&write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot write " + path);
  write(file);
  if (!file)
    throw std::runtime_error("write failed: " + path);
}

} // namespace

int cmd_gen(const GenOptions &options, std::ostream &out, std::ostream &err) {
  try {
    if (options.n == 0 || options.m == 0)
      throw std::invalid_argument("n and m must be >= 1");
    const auto instance = generate_instance(
        options.n, options.m, options.seed, parse_distribution(options.dist));
    with_output(options.out, out,
                [&](std::ostream &o) { write_instance(o, instance); });
    return exit_code::ok;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::failure;
  }
}

int cmd_select(const SelectOptions &options, std::ostream &out,
               std::ostream &err) {
  Instance instance;
  try {
    instance = read_instance(options.input);
  } catch (const ParseError &e) {
    err << "parse error: " << options.input << ": " << e.what() << '\n';
    return exit_code::parse_error;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::failure;
  }

  return std::visit(
      [&](auto &arrays) -> int {
        try {
          TreeConfig config{Rank::from_double(options.alpha),
                            parse_mode(options.mode), options.sorted};
          const auto t0 = Clock::now();
          auto tree = build_tree(std::move(arrays), config);
          const auto t1 = Clock::now();
          const auto result = tree.select_k(options.k);
          const auto t2 = Clock::now();

          with_output(options.output, out, [&](std::ostream &o) {
            for (const auto &x : result)
              o << format_value(x) << '\n';
          });
          const auto stats = tree.stats();
          err << "runtime_seconds=" << format_double(seconds_between(t0, t2))
              << '\n'
              << "runtime_excl_load_seconds="
              << format_double(seconds_between(t1, t2)) << '\n'
              << "values_generated=" << stats.values_generated << '\n'
              << "tuple_pops=" << stats.tuple_pops << '\n'
              << "root_pool_size=" << stats.root_pool_size << '\n';
          return exit_code::ok;
        } catch (const Error &e) {
          err << "error: " << e.what() << '\n';
          return e.kind() == ErrorKind::contract ? exit_code::k_range
                                                 : exit_code::failure;
        } catch (const std::exception &e) {
          err << "error: " << e.what() << '\n';
          return exit_code::failure;
        }
      },
      instance);
}

int cmd_verify(const VerifyOptions &options, std::ostream &out,
               std::ostream &err) {
  if (options.trials == 0)
    err << "warning: trials=0, nothing to verify\n";
  SweepOptions sweep{options.n_max, options.m_max, options.trials,
                     options.seed, 10, Rank::from_double(options.alpha)};
  const auto report = run_oracle_sweep(sweep);
  out << "cases=" << report.cases << " passed=" << report.passed
      << " failed=" << report.failures.size()
      << " mode_disagreements=" << report.mode_disagreements << '\n';
  for (std::size_t i = 0; i < report.failures.size() && i < 20; ++i)
    err << "FAIL " << report.failures[i].replay() << ": "
        << report.failures[i].detail << '\n';
  return report.ok() ? exit_code::ok : exit_code::failure;
}

int cmd_bench(const BenchOptions &options, std::ostream &out,
              std::ostream &err) {
  try {
    if (options.n == 0 || options.m == 0 || options.trials == 0)
      throw std::invalid_argument("n, m and trials must be >= 1");
    if (options.ks.empty())
      throw std::invalid_argument("no k values given");
    auto ks = options.ks;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    const Rank rank = Rank::from_double(options.alpha);

    std::vector<std::size_t> sizes(options.m, options.n);
    const std::size_t total = saturating_product(sizes);
    for (const auto &mode : options.modes) {
      if (mode != "naive")
        parse_mode(mode);
      else if (total > options.cap)
        throw Error(ErrorKind::resource,
                    "naive mode: product size exceeds cap " +
                        std::to_string(options.cap));
    }
    if (ks.front() == 0 || ks.back() > total)
      throw Error(ErrorKind::contract, "k outside [1, product size]");

    const auto instance =
        generate_instance(options.n, options.m, options.seed,
                          parse_distribution(options.dist));

    with_output(options.csv, out, [&](std::ostream &csv) {
      csv << bench_csv_header << '\n';
      std::visit(
          [&](const auto &arrays) {
            using T = typename std::decay_t<decltype(arrays)>::value_type::value_type;
            for (const auto &mode : options.modes) {
              for (const std::size_t k : ks) {
                double sum_incl = 0, sum_excl = 0, sum_gen = 0, sum_pool = 0;
                const std::string prefix =
                    mode + "," + std::to_string(options.n) + "," +
                    std::to_string(options.m) + "," +
                    format_double(options.alpha) + "," + std::to_string(k) + ",";
                for (std::size_t trial = 0; trial < options.trials; ++trial) {
                  auto inputs = arrays;
                  double incl, excl;
                  std::size_t generated, pool;
                  if (mode == "naive") {
                    const auto t0 = Clock::now();
                    const auto r = oracle::brute_multi<T>(inputs, k, options.cap);
                    const auto t1 = Clock::now();
                    incl = excl = seconds_between(t0, t1);
                    generated = pool = total;
                    (void)r;
                  } else {
                    TreeConfig config{rank, parse_mode(mode), false};
                    const auto t0 = Clock::now();
                    auto tree = build_tree(std::move(inputs), config);
                    const auto t1 = Clock::now();
                    const auto r = tree.select_k(k);
                    const auto t2 = Clock::now();
                    incl = seconds_between(t0, t2);
                    excl = seconds_between(t1, t2);
                    const auto stats = tree.stats();
                    generated = stats.values_generated;
                    pool = stats.root_pool_size;
                    (void)r;
                  }
                  sum_incl += incl;
                  sum_excl += excl;
                  sum_gen += static_cast<double>(generated);
                  sum_pool += static_cast<double>(pool);
                  csv << prefix << trial << "," << options.seed << ","
                      << format_double(incl) << "," << format_double(excl)
                      << "," << generated << "," << pool << '\n';
                }
                const double t = static_cast<double>(options.trials);
                csv << prefix << "mean," << options.seed << ","
                    << format_double(sum_incl / t) << ","
                    << format_double(sum_excl / t) << ","
                    << format_double(sum_gen / t) << ","
                    << format_double(sum_pool / t) << '\n';
                if (!options.csv.empty())
                  out << mode << " k=" << k << " mean_runtime_seconds="
                      << format_double(sum_incl / t) << '\n';
              }
            }
          },
          instance);
    });
    return exit_code::ok;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::contract ? exit_code::k_range
                                           : exit_code::failure;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::failure;
  }
}

std::vector<std::string> split_list(const std::string &text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty())
      items.push_back(item);
  return items;
}

std::vector<std::size_t> parse_k_list(const std::string &text) {
  std::vector<std::size_t> ks;
  for (const auto &item : split_list(text))
    ks.push_back(std::stoull(item));
  return ks;
}

std::vector<std::size_t> parse_k_range(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("k range must look like LO:HI");
  const auto lo = std::stoul(text.substr(0, colon));
  const auto hi = std::stoul(text.substr(colon + 1));
  if (lo > hi || hi > 62)
    throw std::invalid_argument("bad k range " + text);
  std::vector<std::size_t> ks;
  for (auto e = lo; e <= hi; ++e)
    ks.push_back(std::size_t{1} << e);
  return ks;
}

} // namespace cartsel::cli
