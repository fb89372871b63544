#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace topogen {

/// Invalid generator or kernel configuration.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Preferential sampling found no eligible node with positive weight.
struct NoCandidateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A link-count target cannot be met from the current graph state.
struct UnreachableTargetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A regression fit lacks the required support.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A metric is undefined for the given input.
struct MetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based source line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace topogen
