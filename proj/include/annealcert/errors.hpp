#pragma once

#include <stdexcept>
#include <string>

namespace annealcert {

// Dimension disagreement between operands (states, operators, trajectories).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// A matrix handed to HermitianOperator differs from its conjugate transpose
// beyond tolerance. Rejected rather than symmetrized.
class HermiticityError : public std::invalid_argument {
 public:
  explicit HermiticityError(const std::string& what) : std::invalid_argument(what) {}
};

// A state vector failed normalization or finiteness checks.
class StateError : public std::invalid_argument {
 public:
  explicit StateError(const std::string& what) : std::invalid_argument(what) {}
};

// The Hermitian eigensolver did not converge.
class EigensolveError : public std::runtime_error {
 public:
  explicit EigensolveError(const std::string& what) : std::runtime_error(what) {}
};

// The amplitude bound was requested outside its validity condition
// 1 - v^2/2 > epsilon; the bound carries no information there.
class ConditionViolatedError : public std::runtime_error {
 public:
  explicit ConditionViolatedError(const std::string& what) : std::runtime_error(what) {}
};

// Configuration errors, split by phase so callers can report them distinctly.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string category, std::string path, std::string message)
      : std::runtime_error(category + ": " + (path.empty() ? "" : path + ": ") + message),
        category_(std::move(category)),
        path_(std::move(path)),
        message_(std::move(message)) {}

  const std::string& category() const { return category_; }
  // JSON-pointer-like location of the offending field, e.g. "system.couplings[0].j".
  const std::string& path() const { return path_; }
  const std::string& message() const { return message_; }

 private:
  std::string category_;
  std::string path_;
  std::string message_;
};

class ConfigParseError : public ConfigError {
 public:
  ConfigParseError(std::size_t line, std::size_t column, const std::string& message)
      : ConfigError("parse", std::to_string(line) + ":" + std::to_string(column), message),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ConfigSchemaError : public ConfigError {
 public:
  ConfigSchemaError(const std::string& path, const std::string& message)
      : ConfigError("schema", path, message) {}
};

class ConfigSemanticError : public ConfigError {
 public:
  ConfigSemanticError(const std::string& path, const std::string& message)
      : ConfigError("semantic", path, message) {}
};

}  // namespace annealcert
