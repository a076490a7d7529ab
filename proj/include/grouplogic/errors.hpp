#pragma once

#include <stdexcept>
#include <string>

namespace grouplogic {

/// Error categories; the numeric values double as CLI exit codes.
enum class ErrorKind {
  Tolerance = 1,  // an audited residual exceeded its threshold
  Input = 2,      // parse errors, malformed structures, groupoid axiom failures
  Measure = 3,    // Haar-system or phase validation failures
  Resource = 4,   // configured size caps exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  int exit_code() const noexcept { return static_cast<int>(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_input(const std::string& msg) {
  throw Error(ErrorKind::Input, msg);
}
[[noreturn]] inline void throw_measure(const std::string& msg) {
  throw Error(ErrorKind::Measure, msg);
}
[[noreturn]] inline void throw_resource(const std::string& msg) {
  throw Error(ErrorKind::Resource, msg);
}

}  // namespace grouplogic
