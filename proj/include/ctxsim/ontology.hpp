#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ctxsim {

enum class ValueKind { Boolean, Number, Text };
enum class Cardinality { Single, Set };

std::string_view to_string(ValueKind kind);
std::string_view to_string(Cardinality card);

struct AttributeDef {
  std::string name;
  ValueKind kind = ValueKind::Text;
  Cardinality cardinality = Cardinality::Single;

  bool operator==(const AttributeDef&) const = default;
};

struct RelationDef {
  std::string name;
  std::string target_class;
  Cardinality cardinality = Cardinality::Single;

  bool operator==(const RelationDef&) const = default;
};

struct ClassDef {
  std::string name;
  std::optional<std::string> parent;
  std::vector<AttributeDef> attributes;
  std::vector<RelationDef> relations;

  bool operator==(const ClassDef&) const = default;
};

using Value = std::variant<bool, double, std::string>;

/// One resource description. Single-valued slots hold exactly one element;
/// a slot missing from the map is absent (partial metadata is legal).
struct Instance {
  std::string id;
  std::string class_name;
  std::map<std::string, std::vector<Value>, std::less<>> attribute_values;
  std::map<std::string, std::vector<std::string>, std::less<>> relation_values;

  const std::vector<Value>* attribute(std::string_view name) const;
  const std::vector<std::string>* relation(std::string_view name) const;

  bool operator==(const Instance&) const = default;
};

/// Own slots plus every ancestor's, root-most class first.
struct EffectiveSlots {
  std::vector<AttributeDef> attributes;
  std::vector<RelationDef> relations;

  std::size_t size() const { return attributes.size() + relations.size(); }
};

/// Validated, immutable class forest plus instance store.
class Ontology {
 public:
  /// Throws ValidationError listing every violated invariant.
  static Ontology build(std::vector<ClassDef> classes,
                        std::vector<Instance> instances);

  std::span<const ClassDef> classes() const { return classes_; }
  /// Instances in document order.
  std::span<const Instance> instances() const { return instances_; }

  const ClassDef* find_class(std::string_view name) const;
  const Instance* find_instance(std::string_view id) const;
  /// Throw UnknownEntityError when absent.
  const ClassDef& class_def(std::string_view name) const;
  const Instance& instance(std::string_view id) const;

  const EffectiveSlots& effective_slots(std::string_view class_name) const;
  const AttributeDef* find_attribute(std::string_view class_name,
                                     std::string_view slot) const;
  const RelationDef* find_relation(std::string_view class_name,
                                   std::string_view slot) const;

  /// Number of IS-A edges up to the root.
  std::size_t class_depth(std::string_view class_name) const;
  std::optional<std::string> lowest_common_ancestor(std::string_view a,
                                                    std::string_view b) const;
  /// The class itself followed by its ancestors up to the root.
  std::vector<std::string> ancestry(std::string_view class_name) const;
  /// True when `class_name` is `ancestor` or one of its descendants.
  bool conforms_to(std::string_view class_name, std::string_view ancestor) const;

  bool operator==(const Ontology& other) const {
    return classes_ == other.classes_ && instances_ == other.instances_;
  }

 private:
  Ontology() = default;
  std::size_t class_index(std::string_view name) const;

  std::vector<ClassDef> classes_;
  std::vector<Instance> instances_;
  std::map<std::string, std::size_t, std::less<>> class_by_name_;
  std::map<std::string, std::size_t, std::less<>> instance_by_id_;
  std::vector<EffectiveSlots> effective_;
  std::vector<std::size_t> depth_;
};

/// Parses and validates an ontology document (JSON with top-level `classes`
/// and `instances`). Throws ParseError or ValidationError.
Ontology load_ontology(std::string_view source);
Ontology load_ontology_file(const std::filesystem::path& path);

/// Inverse of load_ontology; re-loading the output yields an equal Ontology.
std::string serialize_ontology(const Ontology& ontology);

}  // namespace ctxsim
