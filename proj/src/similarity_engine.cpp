#include "ctxsim/similarity_engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <utility>

#include "ctxsim/data_layer.hpp"
#include "ctxsim/errors.hpp"

namespace ctxsim {

void EngineConfig::validate() const {
  if (!(query_side_weight > 0.0 && query_side_weight < target_side_weight) ||
      !std::isfinite(target_side_weight)) {
    throw std::invalid_argument(
        "class-matching weights must satisfy 0 < query_side_weight < target_side_weight");
  }
  if (!(tie_epsilon >= 0.0)) {
    throw std::invalid_argument("tie_epsilon must be non-negative");
  }
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::string> ids,
                                   std::vector<double> values)
    : ids_(std::move(ids)), values_(std::move(values)) {
  if (values_.size() != ids_.size() * ids_.size()) {
    throw std::invalid_argument("matrix values do not match id count");
  }
}

std::size_t Ranking::candidate_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.ids.size();
  return n;
}

SimilarityEngine::SimilarityEngine(const Ontology& ontology, EngineConfig config)
    : ontology_(ontology), config_(config) {
  config_.validate();
}

Score SimilarityEngine::class_matching(std::string_view c1, std::string_view c2) const {
  const std::size_t depth1 = ontology_.class_depth(c1);
  const std::size_t depth2 = ontology_.class_depth(c2);
  if (c1 == c2) return Score::one();
  const auto lca = ontology_.lowest_common_ancestor(c1, c2);
  if (!lca) return Score::zero();
  const double depth = static_cast<double>(ontology_.class_depth(*lca));
  const double d1 = static_cast<double>(depth1) - depth;
  const double d2 = static_cast<double>(depth2) - depth;
  return Score((1.0 + depth) / (1.0 + depth + config_.query_side_weight * d1 +
                                config_.target_side_weight * d2));
}

Score SimilarityEngine::slot_matching(std::string_view c1, std::string_view c2) const {
  const EffectiveSlots& s1 = ontology_.effective_slots(c1);
  const EffectiveSlots& s2 = ontology_.effective_slots(c2);
  if (s1.size() == 0) return Score::one();
  std::size_t shared = 0;
  auto has_name = [&](std::string_view name) {
    return std::ranges::any_of(s2.attributes,
                               [&](const AttributeDef& a) { return a.name == name; }) ||
           std::ranges::any_of(s2.relations,
                               [&](const RelationDef& r) { return r.name == name; });
  };
  for (const auto& a : s1.attributes) shared += has_name(a.name) ? 1 : 0;
  for (const auto& r : s1.relations) shared += has_name(r.name) ? 1 : 0;
  return Score(static_cast<double>(shared) / static_cast<double>(s1.size()));
}

Score SimilarityEngine::external_similarity(const Instance& a, const Instance& b) const {
  if (a.class_name == b.class_name) return Score::one();
  return Score((class_matching(a.class_name, b.class_name).value() +
                slot_matching(a.class_name, b.class_name).value()) /
               2.0);
}

SimilarityEngine::EntryResult SimilarityEngine::evaluate_entry(
    const ApplicationContext& context, const RecursionPath& path, const Instance& query,
    const Instance& target, bool explain) const {
  const ContextEntry* entry = context.lookup(path);
  if (entry == nullptr) {
    throw PreconditionError("context '" + context.name() + "' is undefined at " +
                            path.to_string());
  }
  const std::string expected = terminal_class(ontology_, path);
  if (!ontology_.conforms_to(query.class_name, expected)) {
    throw PreconditionError("instance " + query.id + " is a " + query.class_name +
                            ", but " + path.to_string() + " compares " + expected);
  }

  EntryResult result;
  double total = 0.0;
  std::size_t counted = 0;
  auto record = [&](const Term& term, bool is_relation, Score s,
                    std::vector<ElementMatch> matches = {}) {
    total += s.value();
    ++counted;
    if (explain) {
      result.terms.push_back({path, term.name, is_relation, term.op, s, std::move(matches)});
    }
  };

  for (const Term& term : entry->attribute_ops) {
    const std::vector<Value>* mine = query.attribute(term.name);
    if (mine == nullptr) continue;
    const std::vector<Value>* theirs = target.attribute(term.name);
    if (theirs == nullptr) {
      record(term, false, Score::zero());
      continue;
    }
    switch (term.op) {
      case Operation::Count:
        record(term, false, op_count(*mine, *theirs));
        break;
      case Operation::Inter:
        record(term, false, op_inter(*mine, *theirs, values_equal));
        break;
      case Operation::Simil:
        record(term, false, op_simil(*mine, *theirs, compare_values));
        break;
    }
  }

  for (const Term& term : entry->relation_ops) {
    const std::vector<std::string>* mine = query.relation(term.name);
    if (mine == nullptr) continue;
    const std::vector<std::string>* theirs = target.relation(term.name);
    if (theirs == nullptr) {
      record(term, true, Score::zero());
      continue;
    }
    switch (term.op) {
      case Operation::Count:
        record(term, true, op_count(*mine, *theirs));
        break;
      case Operation::Inter:
        record(term, true, op_inter(*mine, *theirs));
        break;
      case Operation::Simil: {
        const RecursionPath next = path.extended(term.name);
        auto element_sim = [&](const std::string& a, const std::string& b) {
          const Instance& x = ontology_.instance(a);
          const Instance& y = ontology_.instance(b);
          return Score(evaluate_entry(context, next, x, y, false).score.value() *
                       external_similarity(x, y).value());
        };
        const Score s = op_simil(*mine, *theirs, element_sim);
        std::vector<ElementMatch> matches;
        if (explain) {
          for (const auto& a : *mine) {
            ElementMatch m{a, std::nullopt, Score::zero()};
            for (const auto& b : *theirs) {
              const Score candidate = element_sim(a, b);
              if (!m.target_element || candidate > m.score) {
                m.target_element = b;
                m.score = candidate;
              }
            }
            matches.push_back(std::move(m));
          }
        }
        record(term, true, s, std::move(matches));
        break;
      }
    }
  }

  result.score = counted == 0
                     ? Score::one()
                     : Score(std::min(1.0, total / static_cast<double>(counted)));
  return result;
}

Score SimilarityEngine::extensional_similarity(const ApplicationContext& context,
                                               const RecursionPath& path,
                                               const Instance& query,
                                               const Instance& target) const {
  return evaluate_entry(context, path, query, target, false).score;
}

RecursionPath SimilarityEngine::start_path(const ApplicationContext& context,
                                           std::string_view class_name) const {
  for (const auto& cls : ontology_.ancestry(class_name)) {
    RecursionPath candidate{cls, {}};
    if (context.lookup(candidate) != nullptr) return candidate;
  }
  throw PreconditionError("context '" + context.name() + "' has no entry for class " +
                          std::string(class_name) + " or its ancestors");
}

SimilarityScore SimilarityEngine::sim(const ApplicationContext& context,
                                      std::string_view query,
                                      std::string_view target) const {
  const Instance& q = ontology_.instance(query);
  const Instance& t = ontology_.instance(target);
  const RecursionPath start = start_path(context, q.class_name);
  EntryResult entry = evaluate_entry(context, start, q, t, true);
  const Score external = external_similarity(q, t);
  return SimilarityScore{Score(external.value() * entry.score.value()), external,
                         entry.score, std::move(entry.terms)};
}

SimilarityMatrix SimilarityEngine::similarity_matrix(const ApplicationContext& context,
                                                     std::vector<std::string> ids,
                                                     Execution execution) const {
  const std::size_t n = ids.size();
  std::vector<double> values(n * n);
  auto fill_row = [&](std::size_t row) {
    for (std::size_t col = 0; col < n; ++col) {
      values[row * n + col] = sim(context, ids[row], ids[col]).value.value();
    }
  };
  if (execution == Execution::Sequential) {
    for (std::size_t row = 0; row < n; ++row) fill_row(row);
  } else {
    std::vector<std::future<void>> rows;
    rows.reserve(n);
    for (std::size_t row = 0; row < n; ++row) {
      rows.push_back(std::async(std::launch::async, fill_row, row));
    }
    for (auto& f : rows) f.get();
  }
  return SimilarityMatrix(std::move(ids), std::move(values));
}

std::vector<std::string> SimilarityEngine::matrix_ids(
    const ApplicationContext& context) const {
  const auto starts = context.start_classes();
  std::vector<std::string> ids;
  for (const auto& inst : ontology_.instances()) {
    const bool applies = std::ranges::any_of(starts, [&](const std::string& s) {
      return ontology_.conforms_to(inst.class_name, s);
    });
    if (applies) ids.push_back(inst.id);
  }
  return ids;
}

Ranking SimilarityEngine::rank(const ApplicationContext& context,
                               std::string_view query) const {
  const Instance& q = ontology_.instance(query);
  const RecursionPath start = start_path(context, q.class_name);

  std::vector<std::pair<double, std::string>> scored;
  for (const auto& inst : ontology_.instances()) {
    if (inst.id == q.id || !ontology_.conforms_to(inst.class_name, start.start_class)) {
      continue;
    }
    scored.emplace_back(sim(context, q.id, inst.id).value.value(), inst.id);
  }
  std::ranges::sort(scored, [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  Ranking ranking{q.id, context.name(), {}};
  for (auto& [value, id] : scored) {
    if (ranking.groups.empty() ||
        ranking.groups.back().score.value() - value > config_.tie_epsilon) {
      ranking.groups.push_back({{}, Score(value)});
    }
    ranking.groups.back().ids.push_back(std::move(id));
  }
  for (auto& g : ranking.groups) std::ranges::sort(g.ids);
  return ranking;
}

}  // namespace ctxsim
