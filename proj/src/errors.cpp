#include "ctxsim/errors.hpp"

#include <utility>

namespace ctxsim {

namespace {

std::string describe_parse(const std::string& message, std::size_t line,
                           std::size_t column, const std::string& location) {
  if (line > 0) {
    return "parse error at line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + message;
  }
  return "parse error at " + location + ": " + message;
}

std::string describe_validation(const std::vector<Diagnostic>& diagnostics) {
  std::string text = "validation failed";
  for (const auto& d : diagnostics) {
    text += "\n  " + d.to_string();
  }
  return text;
}

}  // namespace

ParseError::ParseError(std::string message, std::size_t line, std::size_t column,
                       std::string location)
    : Error(describe_parse(message, line, column, location)),
      detail_(std::move(message)),
      line_(line),
      column_(column),
      location_(std::move(location)) {}

ValidationError::ValidationError(std::vector<Diagnostic> diagnostics)
    : Error(describe_validation(diagnostics)), diagnostics_(std::move(diagnostics)) {}

UnknownEntityError::UnknownEntityError(std::string kind, std::string name)
    : Error("unknown " + kind + " '" + name + "'"),
      kind_(std::move(kind)),
      name_(std::move(name)) {}

}  // namespace ctxsim
