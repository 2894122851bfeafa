#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace aphidsim {

// Non-finite values entering or produced by the model equations.
class NumericalDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Event bisection did not shrink the bracket to the requested tolerance.
class EventLocalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller broke a documented precondition (empty trajectory, bad controls...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A query whose precondition does not hold for the given data, e.g. peak
// coincidence on a trajectory where one biotype went extinct.
class InapplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed scenario/sweep text. line() is 1-based, 0 when not tied to a line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string s = "invalid scenario:";
    for (const auto& m : v) s += "\n  - " + m;
    return s;
  }
  std::vector<std::string> violations_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace aphidsim
