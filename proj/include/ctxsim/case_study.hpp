#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ctxsim/context.hpp"
#include "ctxsim/ontology.hpp"

namespace ctxsim {

struct GoldenGroup {
  std::vector<std::string> ids;  // as printed
  double score = 0.0;            // 4 decimals
};

/// One published ranking row: query plus tie groups, best first.
struct GoldenRanking {
  std::string context;
  std::string query;
  std::vector<GoldenGroup> groups;
};

/// Parses `query<TAB>id,id,...<TAB>score` lines ('#' starts a comment).
/// Lines of one query must be contiguous. Adjacent groups printed with the
/// same score are merged into one tie group; scores must then strictly
/// decrease. Throws ParseError.
std::vector<GoldenRanking> parse_golden(std::string_view tsv, std::string context_name);

/// Bundled kitchen-container dataset: ontology, the "part" and "usage"
/// contexts, and the published rankings for both.
struct CaseStudy {
  std::shared_ptr<const Ontology> ontology;
  ApplicationContext part;
  ApplicationContext usage;
  std::vector<GoldenRanking> golden_part;
  std::vector<GoldenRanking> golden_usage;

  const ApplicationContext& context(std::string_view name) const;
  const std::vector<GoldenRanking>& golden(std::string_view context_name) const;
};

/// $CTXSIM_DATA_DIR when set, else the dataset directory of the source tree.
std::filesystem::path default_case_study_dir();

/// Verifies every file listed in `dir`/SHA256SUMS. Throws CorruptResourceError.
void verify_case_study_checksums(const std::filesystem::path& dir);

/// Throws CorruptResourceError on checksum mismatch or missing files, and
/// ParseError/ValidationError if a file does not load.
CaseStudy load_case_study(const std::filesystem::path& dir = default_case_study_dir());

}  // namespace ctxsim
