#pragma once

#include <stdexcept>
#include <string>

namespace qla {

// Base class for all qla errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration: mismatched shapes, bad parameters, unknown keys.
// Maps to process exit code 2 in the CLI.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Non-finite values encountered while stepping or building operators.
// Maps to process exit code 3 in the CLI.
class NumericError : public Error {
 public:
  explicit NumericError(const std::string& what) : Error(what) {}
};

}  // namespace qla
