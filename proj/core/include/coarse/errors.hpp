#pragma once

#include <stdexcept>
#include <string>

namespace coarse {

/// Base class for everything this library throws on precondition violations.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: malformed config documents, unknown suite names, element
/// strings that do not parse. CLI maps this to exit code 2.
class ConfigError : public Error {
public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// An enumeration would exceed the declared budget (p^|window| too large).
class BudgetError : public Error {
public:
  explicit BudgetError(const std::string& what) : Error(what) {}
};

/// Parse failure with a byte offset into the offending string.
class ParseError : public ConfigError {
public:
  ParseError(const std::string& what, std::size_t position)
      : ConfigError(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

} // namespace coarse
