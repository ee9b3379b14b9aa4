#include "ctxsim/ontology.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <utility>

#include "ctxsim/errors.hpp"

namespace ctxsim {

std::string_view to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Boolean:
      return "bool";
    case ValueKind::Number:
      return "number";
    case ValueKind::Text:
      return "text";
  }
  return "?";
}

std::string_view to_string(Cardinality card) {
  return card == Cardinality::Single ? "one" : "many";
}

const std::vector<Value>* Instance::attribute(std::string_view name) const {
  auto it = attribute_values.find(name);
  return it == attribute_values.end() ? nullptr : &it->second;
}

const std::vector<std::string>* Instance::relation(std::string_view name) const {
  auto it = relation_values.find(name);
  return it == relation_values.end() ? nullptr : &it->second;
}

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_' || u == '-';
  });
}

bool value_matches(const Value& v, ValueKind kind) {
  switch (kind) {
    case ValueKind::Boolean:
      return std::holds_alternative<bool>(v);
    case ValueKind::Number:
      return std::holds_alternative<double>(v);
    case ValueKind::Text:
      return std::holds_alternative<std::string>(v);
  }
  return false;
}

std::string class_subject(std::string_view name) {
  return "class " + std::string(name);
}

std::string slot_subject(std::string_view instance, std::string_view slot) {
  return "instance " + std::string(instance) + ", slot " + std::string(slot);
}

class Validator {
 public:
  explicit Validator(std::vector<Diagnostic>& out) : out_(out) {}

  void report(std::string subject, std::string message) {
    out_.push_back({std::move(subject), std::move(message)});
  }

 private:
  std::vector<Diagnostic>& out_;
};

}  // namespace

Ontology Ontology::build(std::vector<ClassDef> classes,
                         std::vector<Instance> instances) {
  std::vector<Diagnostic> diagnostics;
  Validator v(diagnostics);
  Ontology onto;
  onto.classes_ = std::move(classes);
  onto.instances_ = std::move(instances);

  for (std::size_t i = 0; i < onto.classes_.size(); ++i) {
    const auto& c = onto.classes_[i];
    if (!is_identifier(c.name)) {
      v.report(class_subject(c.name), "invalid class name");
    }
    if (!onto.class_by_name_.emplace(c.name, i).second) {
      v.report(class_subject(c.name), "duplicate class name");
    }
  }

  bool hierarchy_ok = true;
  for (const auto& c : onto.classes_) {
    if (c.parent && !onto.class_by_name_.contains(*c.parent)) {
      v.report(class_subject(c.name), "unknown parent class '" + *c.parent + "'");
      hierarchy_ok = false;
    }
    for (const auto& r : c.relations) {
      if (!onto.class_by_name_.contains(r.target_class)) {
        v.report(class_subject(c.name), "relation " + r.name +
                                            " targets unknown class '" +
                                            r.target_class + "'");
      }
    }
  }

  if (hierarchy_ok) {
    // A walk longer than the class count can only mean a cycle.
    for (const auto& c : onto.classes_) {
      const ClassDef* cur = &c;
      std::size_t steps = 0;
      while (cur->parent && steps <= onto.classes_.size()) {
        cur = &onto.classes_[onto.class_by_name_.at(*cur->parent)];
        ++steps;
      }
      if (steps > onto.classes_.size()) {
        v.report(class_subject(c.name), "IS-A cycle through parent '" +
                                            *c.parent + "'");
        hierarchy_ok = false;
      }
    }
  }

  if (hierarchy_ok) {
    onto.effective_.resize(onto.classes_.size());
    onto.depth_.resize(onto.classes_.size());
    for (std::size_t i = 0; i < onto.classes_.size(); ++i) {
      std::vector<std::size_t> chain;  // root first
      for (std::size_t k = i;;) {
        chain.insert(chain.begin(), k);
        const auto& parent = onto.classes_[k].parent;
        if (!parent) break;
        k = onto.class_by_name_.at(*parent);
      }
      onto.depth_[i] = chain.size() - 1;
      EffectiveSlots& slots = onto.effective_[i];
      std::set<std::string, std::less<>> seen;
      for (std::size_t k : chain) {
        const auto& c = onto.classes_[k];
        for (const auto& a : c.attributes) {
          if (!seen.insert(a.name).second) {
            if (k == i) {
              v.report(class_subject(onto.classes_[i].name),
                       "slot name '" + a.name + "' collides with another slot");
            }
            continue;
          }
          slots.attributes.push_back(a);
        }
        for (const auto& r : c.relations) {
          if (!seen.insert(r.name).second) {
            if (k == i) {
              v.report(class_subject(onto.classes_[i].name),
                       "slot name '" + r.name + "' collides with another slot");
            }
            continue;
          }
          slots.relations.push_back(r);
        }
      }
    }
    for (const auto& c : onto.classes_) {
      for (const auto& a : c.attributes) {
        if (!is_identifier(a.name)) {
          v.report(class_subject(c.name), "invalid slot name '" + a.name + "'");
        }
      }
      for (const auto& r : c.relations) {
        if (!is_identifier(r.name)) {
          v.report(class_subject(c.name), "invalid slot name '" + r.name + "'");
        }
      }
    }
  }

  for (std::size_t i = 0; i < onto.instances_.size(); ++i) {
    const auto& inst = onto.instances_[i];
    if (!is_identifier(inst.id)) {
      v.report("instance " + inst.id, "invalid instance id");
    }
    if (!onto.instance_by_id_.emplace(inst.id, i).second) {
      v.report("instance " + inst.id, "duplicate instance id");
    }
  }

  for (const auto& inst : onto.instances_) {
    auto cls = onto.class_by_name_.find(inst.class_name);
    if (cls == onto.class_by_name_.end()) {
      v.report("instance " + inst.id, "unknown class '" + inst.class_name + "'");
      continue;
    }
    if (!hierarchy_ok) continue;
    const EffectiveSlots& slots = onto.effective_[cls->second];

    for (const auto& [name, values] : inst.attribute_values) {
      auto decl = std::find_if(slots.attributes.begin(), slots.attributes.end(),
                               [&](const AttributeDef& a) { return a.name == name; });
      if (decl == slots.attributes.end()) {
        v.report(slot_subject(inst.id, name),
                 "attribute not declared for class " + inst.class_name);
        continue;
      }
      if (decl->cardinality == Cardinality::Single && values.size() != 1) {
        v.report(slot_subject(inst.id, name), "single-valued attribute holds " +
                                                  std::to_string(values.size()) +
                                                  " values");
      }
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (!value_matches(values[k], decl->kind)) {
          v.report(slot_subject(inst.id, name),
                   "expected " + std::string(to_string(decl->kind)) + " value");
        } else if (const double* d = std::get_if<double>(&values[k]);
                   d != nullptr && !std::isfinite(*d)) {
          v.report(slot_subject(inst.id, name), "number is not finite");
        }
        if (std::find(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k),
                      values[k]) != values.begin() + static_cast<std::ptrdiff_t>(k)) {
          v.report(slot_subject(inst.id, name), "duplicate value in set");
        }
      }
    }

    for (const auto& [name, targets] : inst.relation_values) {
      auto decl = std::find_if(slots.relations.begin(), slots.relations.end(),
                               [&](const RelationDef& r) { return r.name == name; });
      if (decl == slots.relations.end()) {
        v.report(slot_subject(inst.id, name),
                 "relation not declared for class " + inst.class_name);
        continue;
      }
      if (decl->cardinality == Cardinality::Single && targets.size() != 1) {
        v.report(slot_subject(inst.id, name), "single-valued relation holds " +
                                                  std::to_string(targets.size()) +
                                                  " targets");
      }
      std::set<std::string_view> seen;
      for (const auto& target : targets) {
        if (!seen.insert(target).second) {
          v.report(slot_subject(inst.id, name), "duplicate target '" + target + "'");
        }
        auto it = onto.instance_by_id_.find(target);
        if (it == onto.instance_by_id_.end()) {
          v.report(slot_subject(inst.id, name),
                   "dangling target '" + target + "' (no such instance)");
          continue;
        }
        const auto& target_class = onto.instances_[it->second].class_name;
        if (onto.class_by_name_.contains(target_class) &&
            onto.class_by_name_.contains(decl->target_class) &&
            !onto.conforms_to(target_class, decl->target_class)) {
          v.report(slot_subject(inst.id, name),
                   "target '" + target + "' is a " + target_class + ", expected " +
                       decl->target_class);
        }
      }
    }
  }

  if (!diagnostics.empty()) {
    throw ValidationError(std::move(diagnostics));
  }
  return onto;
}

std::size_t Ontology::class_index(std::string_view name) const {
  auto it = class_by_name_.find(name);
  if (it == class_by_name_.end()) {
    throw UnknownEntityError("class", std::string(name));
  }
  return it->second;
}

const ClassDef* Ontology::find_class(std::string_view name) const {
  auto it = class_by_name_.find(name);
  return it == class_by_name_.end() ? nullptr : &classes_[it->second];
}

const Instance* Ontology::find_instance(std::string_view id) const {
  auto it = instance_by_id_.find(id);
  return it == instance_by_id_.end() ? nullptr : &instances_[it->second];
}

const ClassDef& Ontology::class_def(std::string_view name) const {
  return classes_[class_index(name)];
}

const Instance& Ontology::instance(std::string_view id) const {
  const Instance* found = find_instance(id);
  if (found == nullptr) {
    throw UnknownEntityError("instance", std::string(id));
  }
  return *found;
}

const EffectiveSlots& Ontology::effective_slots(std::string_view class_name) const {
  return effective_[class_index(class_name)];
}

const AttributeDef* Ontology::find_attribute(std::string_view class_name,
                                             std::string_view slot) const {
  for (const auto& a : effective_slots(class_name).attributes) {
    if (a.name == slot) return &a;
  }
  return nullptr;
}

const RelationDef* Ontology::find_relation(std::string_view class_name,
                                           std::string_view slot) const {
  for (const auto& r : effective_slots(class_name).relations) {
    if (r.name == slot) return &r;
  }
  return nullptr;
}

std::size_t Ontology::class_depth(std::string_view class_name) const {
  return depth_[class_index(class_name)];
}

std::vector<std::string> Ontology::ancestry(std::string_view class_name) const {
  std::vector<std::string> chain;
  const ClassDef* cur = &class_def(class_name);
  chain.push_back(cur->name);
  while (cur->parent) {
    cur = &class_def(*cur->parent);
    chain.push_back(cur->name);
  }
  return chain;
}

std::optional<std::string> Ontology::lowest_common_ancestor(std::string_view a,
                                                            std::string_view b) const {
  const auto up_a = ancestry(a);
  const auto up_b = ancestry(b);
  for (const auto& candidate : up_a) {
    if (std::find(up_b.begin(), up_b.end(), candidate) != up_b.end()) {
      return candidate;
    }
  }
  return std::nullopt;
}

bool Ontology::conforms_to(std::string_view class_name,
                           std::string_view ancestor) const {
  const ClassDef* cur = &class_def(class_name);
  class_index(ancestor);
  while (true) {
    if (cur->name == ancestor) return true;
    if (!cur->parent) return false;
    cur = &class_def(*cur->parent);
  }
}

}  // namespace ctxsim
