#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ctxsim/errors.hpp"
#include "ctxsim/ontology.hpp"

namespace ctxsim {

/// How a slot's values are compared: by cardinality, by intersection, or by
/// recursive element similarity.
enum class Operation { Count, Inter, Simil };

std::string_view to_string(Operation op);

/// A start class plus the relations traversed from it, written
/// `[Object.hasPart]`.
struct RecursionPath {
  std::string start_class;
  std::vector<std::string> relations;

  RecursionPath extended(std::string relation) const;
  std::string to_string() const;
  /// Inverse of to_string. Throws ParseError on malformed input.
  static RecursionPath parse(std::string_view text);

  auto operator<=>(const RecursionPath&) const = default;
  bool operator==(const RecursionPath&) const = default;
};

struct Term {
  std::string name;
  Operation op = Operation::Inter;

  bool operator==(const Term&) const = default;
};

/// Attributes and relations examined at one recursion path, in document order.
struct ContextEntry {
  std::vector<Term> attribute_ops;
  std::vector<Term> relation_ops;

  std::size_t size() const { return attribute_ops.size() + relation_ops.size(); }
  bool operator==(const ContextEntry&) const = default;
};

/// Partial function from recursion paths to context entries. Instances of
/// this type are only produced by validate_context/parse_context, so every
/// relation compared with Simil has an entry at the extended path.
class ApplicationContext {
 public:
  const std::string& name() const { return name_; }
  const std::map<RecursionPath, ContextEntry>& entries() const { return entries_; }

  /// The entry at `path`, or nullptr where the context is undefined.
  const ContextEntry* lookup(const RecursionPath& path) const;

  /// Start classes of the zero-length paths, in path order.
  std::vector<std::string> start_classes() const;

  bool operator==(const ApplicationContext&) const = default;

  friend ApplicationContext validate_context(
      std::string name, std::vector<std::pair<RecursionPath, ContextEntry>> entries,
      const Ontology& ontology);

 private:
  ApplicationContext() = default;

  std::string name_;
  std::map<RecursionPath, ContextEntry> entries_;
};

/// Free-function form of ApplicationContext::lookup.
inline const ContextEntry* ac_lookup(const ApplicationContext& context,
                                     const RecursionPath& path) {
  return context.lookup(path);
}

/// Class reached by following `path` from its start class. Throws
/// UnknownEntityError for an unknown class or relation.
std::string terminal_class(const Ontology& ontology, const RecursionPath& path);

/// Checks every context invariant against `ontology` and returns the context.
/// Throws ValidationError listing all violations.
ApplicationContext validate_context(
    std::string name, std::vector<std::pair<RecursionPath, ContextEntry>> entries,
    const Ontology& ontology);

ApplicationContext parse_context(std::string_view source, const Ontology& ontology);
ApplicationContext parse_context_file(const std::filesystem::path& path,
                                      const Ontology& ontology);
std::string serialize_context(const ApplicationContext& context);

}  // namespace ctxsim
