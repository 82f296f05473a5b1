#pragma once

#include <stdexcept>
#include <string>

namespace htls {

/// Failure classes; the CLI maps them onto exit codes 2, 3 and 4.
enum class ErrorKind {
  InvalidInput,  // malformed or out-of-range input
  Domain,        // a closed-form branch does not apply to these parameters
  Numerical,     // overflow, divergence, trace collapse, non-convergence
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace htls
