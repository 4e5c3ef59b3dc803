#pragma once

#include <stdexcept>
#include <string>

namespace convlab {

// Invalid configuration or out-of-domain argument. Maps to exit code 2.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver produced NaN/Inf or lost positivity. Maps to exit code 3.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A reference/oracle evaluation failed to converge. Maps to exit code 4.
class OracleError : public std::runtime_error {
public:
  explicit OracleError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace convlab
