#pragma once

#include <cstdlib>
#include <string>

namespace cartsel {

/// Constants of the work guardrail: generating a layer (or a root pool) of t
/// values should cost at most g * alpha^2 * t + g0 generated values.
/// CARTSEL_GUARD_G and CARTSEL_GUARD_G0 override the defaults.
struct GuardConstants {
  double g = 8.0;
  double g0 = 64.0;

  double limit(double alpha, double t) const { return g * alpha * alpha * t + g0; }

  static GuardConstants from_env() {
    GuardConstants c;
    if (const char *s = std::getenv("CARTSEL_GUARD_G"))
      c.g = std::stod(s);
    if (const char *s = std::getenv("CARTSEL_GUARD_G0"))
      c.g0 = std::stod(s);
    return c;
  }
};

} // namespace cartsel
