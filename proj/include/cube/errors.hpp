#pragma once

#include <stdexcept>
#include <string>

namespace cube {

// Bad command / bad constraint / bad threshold. CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input data: malformed CSV, non-positive measure, reserved
// label, incompatible schemas. CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Enumeration would exceed the configured cell budget. CLI exit code 4.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cube
