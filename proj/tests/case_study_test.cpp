#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <variant>

#include "ctxsim/case_study.hpp"
#include "ctxsim/errors.hpp"
#include "fixtures.hpp"

using namespace ctxsim;
using ctxsim::testing::alessi;
using ctxsim::testing::data_dir;

namespace fs = std::filesystem;

namespace {

fs::path copy_bundle(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ctxsim_" + name + "_" +
                                                    std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (const auto& entry : fs::directory_iterator(data_dir())) {
    fs::copy_file(entry.path(), dir / entry.path().filename());
  }
  return dir;
}

}  // namespace

TEST(CaseStudy, NineObjects) {
  std::size_t n = 0;
  for (const auto& i : alessi().ontology->instances()) n += i.class_name == "Object" ? 1 : 0;
  EXPECT_EQ(n, 9u);
}

TEST(CaseStudy, KettleParts) {
  const auto* parts = alessi().ontology->instance("Kettles_19").relation("hasPart");
  ASSERT_NE(parts, nullptr);
  std::vector<std::string> sorted = *parts;
  std::ranges::sort(sorted);
  EXPECT_EQ(sorted, (std::vector<std::string>{"Cover_31", "Handle_30", "LiquidProofConcavity_29",
                                              "Spout_32", "SupportingBase_39", "Whistle_6"}));
}

TEST(CaseStudy, OilCruetCapacity) {
  const auto* cap =
      alessi().ontology->instance("OilCruet_36").attribute("liquidCapacityInLiters");
  ASSERT_NE(cap, nullptr);
  ASSERT_EQ(cap->size(), 1u);
  EXPECT_EQ(std::get<double>(cap->front()), 0.3);
}

TEST(CaseStudy, GoldenRowsCoverEveryObject) {
  for (const char* name : {"part", "usage"}) {
    const auto& rows = alessi().golden(name);
    EXPECT_EQ(rows.size(), 9u) << name;
    for (const auto& row : rows) {
      std::size_t n = 0;
      for (const auto& g : row.groups) n += g.ids.size();
      EXPECT_EQ(n, 8u) << name << " " << row.query;
    }
  }
  EXPECT_THROW(alessi().golden("shape"), UnknownEntityError);
}

TEST(CaseStudy, ChecksumsVerify) {
  EXPECT_NO_THROW(verify_case_study_checksums(data_dir()));
}

TEST(CaseStudy, CorruptedFileIsDetected) {
  const fs::path dir = copy_bundle("corrupt");
  {
    std::ofstream out(dir / "usage.ctx", std::ios::app);
    out << " ";
  }
  EXPECT_THROW(load_case_study(dir), CorruptResourceError);
  fs::remove_all(dir);
}

TEST(CaseStudy, MissingFileIsDetected) {
  const fs::path dir = copy_bundle("missing");
  fs::remove(dir / "golden_part.tsv");
  EXPECT_THROW(load_case_study(dir), Error);
  fs::remove_all(dir);
}

TEST(Golden, MergesEqualAdjacentGroups) {
  const auto rows = parse_golden(
      "# comment\nQ\tA,B\t0.8750\nQ\tC\t0.8750\nQ\tD\t0.5000\nR\tQ\t1.0000\n", "ctx");
  ASSERT_EQ(rows.size(), 2u);
  ASSERT_EQ(rows[0].groups.size(), 2u);
  EXPECT_EQ(rows[0].groups[0].ids, (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(rows[0].context, "ctx");
}

TEST(Golden, RejectsMalformedRows) {
  EXPECT_THROW(parse_golden("Q\tA\n", "c"), ParseError);
  EXPECT_THROW(parse_golden("Q\tA\tx\n", "c"), ParseError);
  EXPECT_THROW(parse_golden("Q\tA\t0.5\nQ\tB\t0.6\n", "c"), ParseError);
  EXPECT_THROW(parse_golden("Q\tA\t0.5\nR\tB\t0.6\nQ\tC\t0.4\n", "c"), ParseError);
}
