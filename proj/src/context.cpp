#include "ctxsim/context.hpp"

#include <set>
#include <utility>

#include "json_support.hpp"

namespace ctxsim {

using detail::child;
using detail::json;
using detail::ordered_json;

std::string_view to_string(Operation op) {
  switch (op) {
    case Operation::Count:
      return "count";
    case Operation::Inter:
      return "inter";
    case Operation::Simil:
      return "simil";
  }
  return "?";
}

RecursionPath RecursionPath::extended(std::string relation) const {
  RecursionPath next = *this;
  next.relations.push_back(std::move(relation));
  return next;
}

std::string RecursionPath::to_string() const {
  std::string text = "[" + start_class;
  for (const auto& r : relations) text += "." + r;
  return text + "]";
}

RecursionPath RecursionPath::parse(std::string_view text) {
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') {
    throw ParseError("recursion path must look like [Class.relation...]", 0, 0,
                     std::string(text));
  }
  text = text.substr(1, text.size() - 2);
  RecursionPath path;
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    parts.emplace_back(text.substr(start, dot - start));
    if (parts.back().empty()) {
      throw ParseError("empty segment in recursion path", 0, 0, std::string(text));
    }
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  path.start_class = parts.front();
  path.relations.assign(parts.begin() + 1, parts.end());
  return path;
}

const ContextEntry* ApplicationContext::lookup(const RecursionPath& path) const {
  auto it = entries_.find(path);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> ApplicationContext::start_classes() const {
  std::vector<std::string> out;
  for (const auto& [path, _] : entries_) {
    if (path.relations.empty()) out.push_back(path.start_class);
  }
  return out;
}

std::string terminal_class(const Ontology& ontology, const RecursionPath& path) {
  std::string cls = ontology.class_def(path.start_class).name;
  for (const auto& r : path.relations) {
    const RelationDef* rel = ontology.find_relation(cls, r);
    if (rel == nullptr) {
      throw UnknownEntityError("relation", cls + "." + r);
    }
    cls = rel->target_class;
  }
  return cls;
}

ApplicationContext validate_context(
    std::string name, std::vector<std::pair<RecursionPath, ContextEntry>> entries,
    const Ontology& ontology) {
  std::vector<Diagnostic> diagnostics;
  auto report = [&](std::string subject, std::string message) {
    diagnostics.push_back({std::move(subject), std::move(message)});
  };

  ApplicationContext ctx;
  ctx.name_ = std::move(name);
  if (ctx.name_.empty()) {
    report("context", "name must not be empty");
  }

  for (auto& [path, entry] : entries) {
    const std::string subject = "path " + path.to_string();

    // Resolve the terminal class one step at a time so the diagnostic can
    // name the exact relation that fails.
    std::string cls;
    if (ontology.find_class(path.start_class) == nullptr) {
      report(subject, "unknown start class '" + path.start_class + "'");
    } else {
      cls = path.start_class;
      for (const auto& r : path.relations) {
        const RelationDef* rel = ontology.find_relation(cls, r);
        if (rel == nullptr) {
          report(subject, "'" + r + "' is not a relation of class " + cls);
          cls.clear();
          break;
        }
        cls = rel->target_class;
      }
    }

    if (!cls.empty()) {
      std::set<std::string> names;
      for (const auto& term : entry.attribute_ops) {
        if (!names.insert(term.name).second) {
          report(subject, "'" + term.name + "' appears more than once");
        }
        if (ontology.find_attribute(cls, term.name) == nullptr) {
          report(subject, "'" + term.name + "' is not an attribute of class " + cls);
        }
      }
      for (const auto& term : entry.relation_ops) {
        if (!names.insert(term.name).second) {
          report(subject, "'" + term.name + "' appears more than once");
        }
        if (ontology.find_relation(cls, term.name) == nullptr) {
          report(subject, "'" + term.name + "' is not a relation of class " + cls);
        }
      }
    }

    if (!ctx.entries_.emplace(path, std::move(entry)).second) {
      report(subject, "more than one entry for this path");
    }
  }

  for (const auto& [path, entry] : ctx.entries_) {
    for (const auto& term : entry.relation_ops) {
      if (term.op != Operation::Simil) continue;
      const RecursionPath next = path.extended(term.name);
      if (!ctx.entries_.contains(next)) {
        report("path " + path.to_string(),
               "relation '" + term.name + "' uses simil but no entry exists for " +
                   next.to_string());
      }
    }
  }

  if (!diagnostics.empty()) {
    throw ValidationError(std::move(diagnostics));
  }
  return ctx;
}

namespace {

Operation parse_op(const json& value, const std::string& at) {
  const std::string s = detail::expect_string(value, at);
  if (s == "count") return Operation::Count;
  if (s == "inter") return Operation::Inter;
  if (s == "simil") return Operation::Simil;
  throw ParseError("unknown operation '" + s + "' (expected count|inter|simil)", 0, 0,
                   at);
}

std::vector<Term> parse_terms(const json* list, const std::string& at) {
  std::vector<Term> terms;
  if (list == nullptr) return terms;
  detail::expect_array(*list, at);
  for (std::size_t i = 0; i < list->size(); ++i) {
    const auto here = child(at, i);
    const json& t = (*list)[i];
    detail::expect_keys(t, {"name", "op"}, here);
    terms.push_back(
        {detail::expect_string(detail::member(t, "name", here), child(here, "name")),
         parse_op(detail::member(t, "op", here), child(here, "op"))});
  }
  return terms;
}

ordered_json terms_json(const std::vector<Term>& terms) {
  ordered_json out = ordered_json::array();
  for (const auto& t : terms) {
    out.push_back({{"name", t.name}, {"op", to_string(t.op)}});
  }
  return out;
}

}  // namespace

ApplicationContext parse_context(std::string_view source, const Ontology& ontology) {
  const json doc = detail::parse_document(source);
  detail::expect_object(doc, "");
  detail::expect_keys(doc, {"name", "entries"}, "");
  std::string name = detail::expect_string(detail::member(doc, "name", ""), "/name");

  std::vector<std::pair<RecursionPath, ContextEntry>> entries;
  const json& list = detail::expect_array(detail::member(doc, "entries", ""), "/entries");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const auto at = child("/entries", i);
    const json& e = list[i];
    detail::expect_keys(e, {"path", "attrs", "rels"}, at);

    const auto path_at = child(at, "path");
    const json& p = detail::member(e, "path", at);
    detail::expect_keys(p, {"start", "relations"}, path_at);
    RecursionPath path;
    path.start_class =
        detail::expect_string(detail::member(p, "start", path_at), child(path_at, "start"));
    if (const json* rels = detail::optional_member(p, "relations", path_at)) {
      const auto rels_at = child(path_at, "relations");
      detail::expect_array(*rels, rels_at);
      for (std::size_t k = 0; k < rels->size(); ++k) {
        path.relations.push_back(detail::expect_string((*rels)[k], child(rels_at, k)));
      }
    }

    ContextEntry entry;
    entry.attribute_ops =
        parse_terms(detail::optional_member(e, "attrs", at), child(at, "attrs"));
    entry.relation_ops =
        parse_terms(detail::optional_member(e, "rels", at), child(at, "rels"));
    entries.emplace_back(std::move(path), std::move(entry));
  }
  return validate_context(std::move(name), std::move(entries), ontology);
}

ApplicationContext parse_context_file(const std::filesystem::path& path,
                                      const Ontology& ontology) {
  return parse_context(detail::read_text_file(path.string()), ontology);
}

std::string serialize_context(const ApplicationContext& context) {
  ordered_json doc;
  doc["name"] = context.name();
  doc["entries"] = ordered_json::array();
  for (const auto& [path, entry] : context.entries()) {
    ordered_json e;
    e["path"] = {{"start", path.start_class}, {"relations", path.relations}};
    e["attrs"] = terms_json(entry.attribute_ops);
    e["rels"] = terms_json(entry.relation_ops);
    doc["entries"].push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

}  // namespace ctxsim
