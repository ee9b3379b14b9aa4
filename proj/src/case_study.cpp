#include "ctxsim/case_study.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "ctxsim/errors.hpp"
#include "json_support.hpp"

#ifndef CTXSIM_DEFAULT_DATA_DIR
#define CTXSIM_DEFAULT_DATA_DIR "data/alessi"
#endif

namespace ctxsim {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string read_resource(const std::filesystem::path& path) {
  try {
    return detail::read_text_file(path.string());
  } catch (const Error&) {
    throw CorruptResourceError("missing case-study resource " + path.string());
  }
}

}  // namespace

std::vector<GoldenRanking> parse_golden(std::string_view tsv, std::string context_name) {
  std::vector<GoldenRanking> rows;
  std::set<std::string, std::less<>> finished;
  std::size_t line_no = 0;
  for (std::string_view line : split(tsv, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw ParseError("expected 3 tab-separated fields", line_no, 1);
    }
    const std::string query(fields[0]);
    GoldenGroup group;
    for (auto id : split(fields[1], ',')) {
      if (id.empty()) throw ParseError("empty id in tie group", line_no, 1);
      group.ids.emplace_back(id);
    }
    const std::string score_text(fields[2]);
    std::size_t used = 0;
    try {
      group.score = std::stod(score_text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != score_text.size() || score_text.empty()) {
      throw ParseError("invalid score '" + score_text + "'", line_no, 1);
    }

    if (rows.empty() || rows.back().query != query) {
      if (!rows.empty()) finished.insert(rows.back().query);
      if (finished.contains(query)) {
        throw ParseError("lines for query " + query + " are not contiguous", line_no, 1);
      }
      rows.push_back({context_name, query, {}});
    }
    auto& groups = rows.back().groups;
    if (!groups.empty() && groups.back().score == group.score) {
      groups.back().ids.insert(groups.back().ids.end(), group.ids.begin(), group.ids.end());
    } else {
      if (!groups.empty() && groups.back().score < group.score) {
        throw ParseError("scores must decrease within a ranking", line_no, 1);
      }
      groups.push_back(std::move(group));
    }
  }
  return rows;
}

const ApplicationContext& CaseStudy::context(std::string_view name) const {
  if (name == part.name()) return part;
  if (name == usage.name()) return usage;
  throw UnknownEntityError("context", std::string(name));
}

const std::vector<GoldenRanking>& CaseStudy::golden(std::string_view context_name) const {
  if (context_name == part.name()) return golden_part;
  if (context_name == usage.name()) return golden_usage;
  throw UnknownEntityError("context", std::string(context_name));
}

std::filesystem::path default_case_study_dir() {
  if (const char* env = std::getenv("CTXSIM_DATA_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return CTXSIM_DEFAULT_DATA_DIR;
}

void verify_case_study_checksums(const std::filesystem::path& dir) {
  const std::string manifest = read_resource(dir / "SHA256SUMS");
  std::size_t listed = 0;
  for (std::string_view line : split(manifest, '\n')) {
    if (line.empty()) continue;
    // sha256sum format: "<hex>  <file>"
    const auto gap = line.find("  ");
    if (gap == std::string_view::npos) {
      throw CorruptResourceError("malformed SHA256SUMS line");
    }
    const std::string expected(line.substr(0, gap));
    const std::string file(line.substr(gap + 2));
    const std::string actual = sha256_hex(read_resource(dir / file));
    if (actual != expected) {
      throw CorruptResourceError("checksum mismatch for " + (dir / file).string());
    }
    ++listed;
  }
  if (listed == 0) throw CorruptResourceError("SHA256SUMS lists no files");
}

CaseStudy load_case_study(const std::filesystem::path& dir) {
  verify_case_study_checksums(dir);
  auto ontology =
      std::make_shared<const Ontology>(load_ontology(read_resource(dir / "alessi.onto")));
  CaseStudy study{ontology,
                  parse_context(read_resource(dir / "part.ctx"), *ontology),
                  parse_context(read_resource(dir / "usage.ctx"), *ontology),
                  {},
                  {}};
  study.golden_part = parse_golden(read_resource(dir / "golden_part.tsv"), study.part.name());
  study.golden_usage =
      parse_golden(read_resource(dir / "golden_usage.tsv"), study.usage.name());

  for (const auto* table : {&study.golden_part, &study.golden_usage}) {
    for (const auto& row : *table) {
      const Instance& query = ontology->instance(row.query);
      std::multiset<std::string> covered;
      for (const auto& g : row.groups) {
        for (const auto& id : g.ids) {
          ontology->instance(id);
          covered.insert(id);
        }
      }
      std::multiset<std::string> expected;
      for (const auto& inst : ontology->instances()) {
        if (inst.class_name == query.class_name && inst.id != query.id) {
          expected.insert(inst.id);
        }
      }
      if (covered != expected) {
        throw CorruptResourceError("golden row for " + row.query + " (" + row.context +
                                   ") does not cover every other " + query.class_name);
      }
    }
  }
  return study;
}

}  // namespace ctxsim
