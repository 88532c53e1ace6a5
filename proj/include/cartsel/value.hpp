#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "cartsel/error.hpp"

namespace cartsel {

/// Element type of the inputs and of their sums: totally ordered and closed
/// under addition. The library is instantiated for std::int64_t and double.
template <typename T>
concept Value = std::totally_ordered<T> && std::is_arithmetic_v<T> &&
                requires(T a, T b) {
                  { a + b } -> std::convertible_to<T>;
                };

/// Rejects NaN on the floating profile, and on the integer profile rejects
/// input ranges whose m-fold sums could leave the representable range.
template <Value T>
void validate_inputs(std::span<const std::vector<T>> inputs) {
  if constexpr (std::is_floating_point_v<T>) {
    for (std::size_t i = 0; i < inputs.size(); ++i)
      for (const T &x : inputs[i])
        if (std::isnan(x))
          throw Error(ErrorKind::invalid_value,
                      "input " + std::to_string(i) + " contains NaN");
  } else {
    __int128 lo = 0, hi = 0;
    for (const auto &xs : inputs) {
      if (xs.empty())
        continue;
      T mn = xs.front(), mx = xs.front();
      for (const T &x : xs) {
        mn = x < mn ? x : mn;
        mx = mx < x ? x : mx;
      }
      lo += static_cast<__int128>(mn);
      hi += static_cast<__int128>(mx);
    }
    if (lo < static_cast<__int128>(std::numeric_limits<T>::min()) ||
        hi > static_cast<__int128>(std::numeric_limits<T>::max()))
      throw Error(ErrorKind::invalid_value,
                  "input ranges are wide enough for sums to overflow");
  }
}

/// Product of the sizes, saturating at SIZE_MAX.
inline std::size_t saturating_product(std::span<const std::size_t> sizes) {
  unsigned __int128 p = 1;
  constexpr auto cap = static_cast<unsigned __int128>(SIZE_MAX);
  for (std::size_t s : sizes) {
    p *= s;
    if (p > cap)
      return SIZE_MAX;
  }
  return static_cast<std::size_t>(p);
}

} // namespace cartsel
