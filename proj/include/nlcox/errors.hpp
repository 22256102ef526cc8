#pragma once

#include <stdexcept>
#include <string>

namespace nlcox {

// Invalid graph input: bad syntax or a violated graph invariant.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_ = 0;
};

// A documented size limit was exceeded.
class CapacityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A floating-point result landed inside a forbidden tolerance band, or an
// eigenvalue iteration failed to converge.
class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unusable command-line input that is not a graph-validity problem
// (unreadable file, malformed word argument).
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nlcox
