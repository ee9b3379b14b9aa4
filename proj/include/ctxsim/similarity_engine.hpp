#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctxsim/context.hpp"
#include "ctxsim/ontology.hpp"
#include "ctxsim/score.hpp"

namespace ctxsim {

struct EngineConfig {
  /// Class-matching weights on the query-side and target-side distance to
  /// the lowest common ancestor. Must satisfy 0 < query < target.
  double query_side_weight = 0.3;
  double target_side_weight = 0.7;
  /// Scores closer than this to a tie group's leading score join the group.
  double tie_epsilon = 1e-9;

  /// Throws std::invalid_argument on inconsistent settings.
  void validate() const;
};

/// Best counterpart of one query-side element inside a Simil relation term.
struct ElementMatch {
  std::string query_element;
  std::optional<std::string> target_element;  // absent when the target set is empty
  Score score;
};

struct TermScore {
  RecursionPath path;
  std::string entity;
  bool is_relation = false;
  Operation op = Operation::Inter;
  Score score;
  std::vector<ElementMatch> matches;  // Simil relation terms only
};

struct SimilarityScore {
  Score value;
  Score external;
  Score extensional;
  /// Terms scored at the start path, in context order. Skipped terms (slot
  /// missing on the query side) are not listed, so these average to
  /// `extensional` (or the list is empty and extensional is 1).
  std::vector<TermScore> terms;
};

/// Row-major grid; row = query, column = target.
class SimilarityMatrix {
 public:
  SimilarityMatrix(std::vector<std::string> ids, std::vector<double> values);

  const std::vector<std::string>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  double at(std::size_t row, std::size_t column) const {
    return values_[row * ids_.size() + column];
  }
  const std::vector<double>& values() const { return values_; }

 private:
  std::vector<std::string> ids_;
  std::vector<double> values_;
};

struct TieGroup {
  std::vector<std::string> ids;  // ascending
  Score score;
};

struct Ranking {
  std::string query;
  std::string context;
  std::vector<TieGroup> groups;

  std::size_t candidate_count() const;
};

enum class Execution { Sequential, Parallel };

/// Context-parameterized, asymmetric instance similarity over one ontology.
/// Holds a reference to the ontology; all queries are const and thread-safe.
class SimilarityEngine {
 public:
  explicit SimilarityEngine(const Ontology& ontology, EngineConfig config = {});

  const Ontology& ontology() const { return ontology_; }
  const EngineConfig& config() const { return config_; }

  /// (1 + depth(lca)) / (1 + depth(lca) + wq * d1 + wt * d2), where d1 and
  /// d2 are the edge distances from c1 and c2 to their lowest common
  /// ancestor. 1 for identical classes, 0 for classes in disjoint trees.
  Score class_matching(std::string_view c1, std::string_view c2) const;

  /// Share of c1's effective slot names that c2 also has.
  Score slot_matching(std::string_view c1, std::string_view c2) const;

  /// Mean of class and slot matching on the instances' classes.
  Score external_similarity(const Instance& a, const Instance& b) const;

  /// Unweighted mean of the terms of the entry at `path`. Throws
  /// PreconditionError when the path is undefined in `context` or when
  /// `query` does not conform to the path's terminal class.
  Score extensional_similarity(const ApplicationContext& context,
                               const RecursionPath& path, const Instance& query,
                               const Instance& target) const;

  /// The zero-length path used for instances of `class_name`: the deepest
  /// start class among the class and its ancestors. Throws PreconditionError.
  RecursionPath start_path(const ApplicationContext& context,
                           std::string_view class_name) const;

  SimilarityScore sim(const ApplicationContext& context, std::string_view query,
                      std::string_view target) const;

  SimilarityMatrix similarity_matrix(const ApplicationContext& context,
                                     std::vector<std::string> ids,
                                     Execution execution = Execution::Sequential) const;

  /// Instances (document order) that conform to one of the context's start
  /// classes: the default id list for a matrix.
  std::vector<std::string> matrix_ids(const ApplicationContext& context) const;

  /// Every other instance conforming to the query's start class, grouped by
  /// score (descending) into tie groups.
  Ranking rank(const ApplicationContext& context, std::string_view query) const;

 private:
  struct EntryResult {
    Score score;
    std::vector<TermScore> terms;
  };

  EntryResult evaluate_entry(const ApplicationContext& context,
                             const RecursionPath& path, const Instance& query,
                             const Instance& target, bool explain) const;

  const Ontology& ontology_;
  EngineConfig config_;
};

}  // namespace ctxsim
