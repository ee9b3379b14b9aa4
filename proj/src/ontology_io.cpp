#include <utility>

#include "ctxsim/errors.hpp"
#include "ctxsim/ontology.hpp"
#include "json_support.hpp"

namespace ctxsim {

using detail::child;
using detail::json;
using detail::ordered_json;

namespace {

ValueKind parse_kind(const json& value, const std::string& at) {
  const std::string s = detail::expect_string(value, at);
  if (s == "bool") return ValueKind::Boolean;
  if (s == "number") return ValueKind::Number;
  if (s == "text") return ValueKind::Text;
  throw ParseError("unknown kind '" + s + "' (expected bool|number|text)", 0, 0, at);
}

Cardinality parse_card(const json* value, const std::string& at) {
  if (value == nullptr) return Cardinality::Single;
  const std::string s = detail::expect_string(*value, at);
  if (s == "one") return Cardinality::Single;
  if (s == "many") return Cardinality::Set;
  throw ParseError("unknown cardinality '" + s + "' (expected one|many)", 0, 0, at);
}

Value parse_scalar(const json& value, const std::string& at) {
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) return value.get<std::string>();
  throw ParseError("expected bool, number or string, found " +
                       std::string(value.type_name()),
                   0, 0, at);
}

ClassDef parse_class(const json& entry, const std::string& at) {
  detail::expect_keys(entry, {"name", "parent", "attributes", "relations"}, at);
  ClassDef c;
  c.name = detail::expect_string(detail::member(entry, "name", at), child(at, "name"));
  if (const json* parent = detail::optional_member(entry, "parent", at)) {
    c.parent = detail::expect_string(*parent, child(at, "parent"));
  }
  if (const json* attrs = detail::optional_member(entry, "attributes", at)) {
    const auto base = child(at, "attributes");
    detail::expect_array(*attrs, base);
    for (std::size_t i = 0; i < attrs->size(); ++i) {
      const auto here = child(base, i);
      const json& a = (*attrs)[i];
      detail::expect_keys(a, {"name", "kind", "card"}, here);
      c.attributes.push_back(
          {detail::expect_string(detail::member(a, "name", here), child(here, "name")),
           parse_kind(detail::member(a, "kind", here), child(here, "kind")),
           parse_card(detail::optional_member(a, "card", here), child(here, "card"))});
    }
  }
  if (const json* rels = detail::optional_member(entry, "relations", at)) {
    const auto base = child(at, "relations");
    detail::expect_array(*rels, base);
    for (std::size_t i = 0; i < rels->size(); ++i) {
      const auto here = child(base, i);
      const json& r = (*rels)[i];
      detail::expect_keys(r, {"name", "target", "card"}, here);
      c.relations.push_back(
          {detail::expect_string(detail::member(r, "name", here), child(here, "name")),
           detail::expect_string(detail::member(r, "target", here), child(here, "target")),
           parse_card(detail::optional_member(r, "card", here), child(here, "card"))});
    }
  }
  return c;
}

Instance parse_instance(const json& entry, const std::string& at) {
  detail::expect_keys(entry, {"id", "class", "attrs", "rels"}, at);
  Instance inst;
  inst.id = detail::expect_string(detail::member(entry, "id", at), child(at, "id"));
  inst.class_name =
      detail::expect_string(detail::member(entry, "class", at), child(at, "class"));
  if (const json* attrs = detail::optional_member(entry, "attrs", at)) {
    const auto base = child(at, "attrs");
    detail::expect_object(*attrs, base);
    for (const auto& [name, value] : attrs->items()) {
      const auto here = child(base, name);
      std::vector<Value> values;
      if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
          values.push_back(parse_scalar(value[i], child(here, i)));
        }
      } else {
        values.push_back(parse_scalar(value, here));
      }
      inst.attribute_values.emplace(name, std::move(values));
    }
  }
  if (const json* rels = detail::optional_member(entry, "rels", at)) {
    const auto base = child(at, "rels");
    detail::expect_object(*rels, base);
    for (const auto& [name, value] : rels->items()) {
      const auto here = child(base, name);
      detail::expect_array(value, here);
      std::vector<std::string> targets;
      for (std::size_t i = 0; i < value.size(); ++i) {
        targets.push_back(detail::expect_string(value[i], child(here, i)));
      }
      inst.relation_values.emplace(name, std::move(targets));
    }
  }
  return inst;
}

ordered_json scalar_json(const Value& v) {
  return std::visit([](const auto& x) { return ordered_json(x); }, v);
}

}  // namespace

Ontology load_ontology(std::string_view source) {
  const json doc = detail::parse_document(source);
  detail::expect_object(doc, "");
  detail::expect_keys(doc, {"classes", "instances"}, "");

  std::vector<ClassDef> classes;
  const json& class_list = detail::expect_array(detail::member(doc, "classes", ""), "/classes");
  for (std::size_t i = 0; i < class_list.size(); ++i) {
    classes.push_back(parse_class(class_list[i], child("/classes", i)));
  }

  std::vector<Instance> instances;
  if (const json* list = detail::optional_member(doc, "instances", "")) {
    detail::expect_array(*list, "/instances");
    for (std::size_t i = 0; i < list->size(); ++i) {
      instances.push_back(parse_instance((*list)[i], child("/instances", i)));
    }
  }
  return Ontology::build(std::move(classes), std::move(instances));
}

Ontology load_ontology_file(const std::filesystem::path& path) {
  return load_ontology(detail::read_text_file(path.string()));
}

std::string serialize_ontology(const Ontology& ontology) {
  ordered_json doc;
  doc["classes"] = ordered_json::array();
  for (const auto& c : ontology.classes()) {
    ordered_json entry;
    entry["name"] = c.name;
    if (c.parent) entry["parent"] = *c.parent;
    entry["attributes"] = ordered_json::array();
    for (const auto& a : c.attributes) {
      entry["attributes"].push_back({{"name", a.name},
                                     {"kind", to_string(a.kind)},
                                     {"card", to_string(a.cardinality)}});
    }
    entry["relations"] = ordered_json::array();
    for (const auto& r : c.relations) {
      entry["relations"].push_back({{"name", r.name},
                                    {"target", r.target_class},
                                    {"card", to_string(r.cardinality)}});
    }
    doc["classes"].push_back(std::move(entry));
  }

  doc["instances"] = ordered_json::array();
  for (const auto& inst : ontology.instances()) {
    ordered_json entry;
    entry["id"] = inst.id;
    entry["class"] = inst.class_name;
    ordered_json attrs = ordered_json::object();
    for (const auto& [name, values] : inst.attribute_values) {
      const AttributeDef* decl = ontology.find_attribute(inst.class_name, name);
      if (decl != nullptr && decl->cardinality == Cardinality::Single) {
        attrs[name] = scalar_json(values.front());
      } else {
        ordered_json list = ordered_json::array();
        for (const auto& v : values) list.push_back(scalar_json(v));
        attrs[name] = std::move(list);
      }
    }
    entry["attrs"] = std::move(attrs);
    ordered_json rels = ordered_json::object();
    for (const auto& [name, targets] : inst.relation_values) {
      rels[name] = targets;
    }
    entry["rels"] = std::move(rels);
    doc["instances"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace ctxsim
