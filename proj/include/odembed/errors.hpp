#pragma once

#include <stdexcept>
#include <string>

namespace odembed {

// Coarse classification; the C API maps each kind onto a status code.
enum class ErrorKind {
  InvalidArgument,    // malformed input, violated precondition
  PropertyViolation,  // off-orbit snapshot and similar "the math says no" results
  Infeasible,         // window or horizon beyond what can be materialized
  Internal,           // an invariant the construction guarantees did not hold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_invalid(const std::string& what) {
  throw Error(ErrorKind::InvalidArgument, what);
}

[[noreturn]] inline void fail_internal(const std::string& what) {
  throw Error(ErrorKind::Internal, what);
}

}  // namespace odembed
