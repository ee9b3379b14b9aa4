#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctxsim {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed document. `line`/`column` are 1-based; both are 0 when the
/// problem is structural and `location` holds a JSON pointer instead.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column,
             std::string location = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& location() const noexcept { return location_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
  std::string location_;
};

struct Diagnostic {
  std::string subject;  // e.g. "instance Jug_26, slot hasPart"
  std::string message;

  std::string to_string() const { return subject + ": " + message; }
  bool operator==(const Diagnostic&) const = default;
};

/// A well-formed document that violates one or more invariants. Carries every
/// violation found, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept {
    return diagnostics_;
  }

 private:
  std::vector<Diagnostic> diagnostics_;
};

class UnknownEntityError : public Error {
 public:
  UnknownEntityError(std::string kind, std::string name);

  const std::string& kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string kind_;
  std::string name_;
};

/// A call whose arguments are individually valid but do not fit together,
/// e.g. an undefined recursion path or a query outside the context's classes.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CorruptResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctxsim
