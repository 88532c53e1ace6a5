#pragma once

#include <stdexcept>
#include <string>

namespace cartsel {

enum class ErrorKind {
  config,            // bad rank or other configuration value
  empty_input,       // an input array (or the list of inputs) is empty
  contract,          // caller violated a precondition (k out of range, ...)
  resource,          // brute-force enumeration above the configured cap
  invalid_value,     // NaN or a value range that could overflow
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace cartsel
