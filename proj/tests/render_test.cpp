#include <gtest/gtest.h>

#include "ctxsim/render.hpp"
#include "ctxsim/similarity_engine.hpp"
#include "fixtures.hpp"

using namespace ctxsim;
using ctxsim::testing::alessi;

TEST(Render, ScoreFormatting) {
  EXPECT_EQ(format_score(1.0), "1.0000");
  EXPECT_EQ(format_score(0.0), "0.0000");
  EXPECT_EQ(format_score(5.0 / 6.0), "0.8333");
  EXPECT_EQ(format_score(2.0 / 3.0), "0.6667");
  EXPECT_EQ(format_score(0.4), "0.4000");
  EXPECT_EQ(round4(5.0 / 6.0), 0.8333);
  EXPECT_EQ(round4(0.96969696), 0.9697);
}

TEST(Render, PixelValues) {
  EXPECT_EQ(pixel_value(1.0), 0);
  EXPECT_EQ(pixel_value(0.0), 255);
  EXPECT_EQ(pixel_value(0.5), 128);
}

TEST(Render, RankingTable) {
  const Ranking all{"IceBucket_28", "part", {{{"A", "B", "C"}, Score::one()}}};
  EXPECT_EQ(render_ranking_table(all),
            "# query=IceBucket_28 context=part\nrank\tobjects\tscore\n1\tALL\t1.0000\n");

  const Ranking split{"Q", "usage", {{{"A", "B"}, Score(5.0 / 6.0)}, {{"C"}, Score(0.25)}}};
  EXPECT_EQ(render_ranking_table(split),
            "# query=Q context=usage\nrank\tobjects\tscore\n1\tA B\t0.8333\n2\tC\t0.2500\n");

  const Ranking lone{"Q", "usage", {{{"A"}, Score(0.5)}}};
  EXPECT_NE(render_ranking_table(lone).find("1\tA\t0.5000"), std::string::npos);
}

TEST(Render, RankingJson) {
  const Ranking r{"Q", "usage", {{{"A", "B"}, Score(5.0 / 6.0)}, {{"C"}, Score(0.25)}}};
  const auto j = ranking_json(r);
  EXPECT_EQ(j["query"], "Q");
  EXPECT_EQ(j["groups"].size(), 2u);
  EXPECT_EQ(j["groups"][0]["rank"], 1);
  EXPECT_EQ(j["groups"][0]["score"].get<double>(), 0.8333);
  EXPECT_EQ(j["groups"][1]["ids"][0], "C");
}

TEST(Render, MatrixFormats) {
  const SimilarityMatrix m({"x", "y"}, {1.0, 0.5, 0.25, 1.0});
  EXPECT_EQ(matrix_csv(m), ",x,y\nx,1.0000,0.5000\ny,0.2500,1.0000\n");
  const std::string pgm = matrix_pgm(m);
  const std::string header = "P5\n2 2\n255\n";
  ASSERT_EQ(pgm.size(), header.size() + 4);
  EXPECT_EQ(pgm.substr(0, header.size()), header);
  EXPECT_EQ(static_cast<unsigned char>(pgm[header.size()]), 0);
  EXPECT_EQ(static_cast<unsigned char>(pgm[header.size() + 1]), 128);
  EXPECT_EQ(static_cast<unsigned char>(pgm[header.size() + 2]), 191);
  const auto j = matrix_json(m, "c");
  EXPECT_EQ(j["values"][1][0].get<double>(), 0.25);
  EXPECT_THROW(SimilarityMatrix({"x"}, {1.0, 1.0}), std::invalid_argument);
}

TEST(Render, SimilarityJson) {
  const SimilarityEngine engine(*alessi().ontology);
  const auto j = similarity_json(engine.sim(alessi().usage, "Jug_24", "Jug_26"), "Jug_24",
                                 "Jug_26", "usage");
  EXPECT_EQ(j["value"].get<double>(), 0.9778);
  EXPECT_EQ(j["external"].get<double>(), 1.0);
  EXPECT_EQ(j["extensional"].get<double>(), 0.9778);
  EXPECT_EQ(j["terms"].size(), 3u);
  EXPECT_EQ(j["terms"][0]["path"], "[Object]");
}

TEST(Render, InstanceJson) {
  const auto j = instance_json(alessi().ontology->instance("OilCruet_36"));
  EXPECT_EQ(j["class"], "Object");
  EXPECT_EQ(j["attrs"]["liquidCapacityInLiters"][0].get<double>(), 0.3);
  EXPECT_EQ(j["rels"]["hasPart"].size(), 5u);
}
