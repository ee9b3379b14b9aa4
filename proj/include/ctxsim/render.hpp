#pragma once

// Output formats shared by the CLI and the HTTP service. Every number leaving
// the process goes through round4/format_score.

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ctxsim/ontology.hpp"
#include "ctxsim/similarity_engine.hpp"

namespace ctxsim {

/// Rounds half away from zero to 4 decimals.
double round4(double value);
std::string format_score(double value);

/// Grayscale pixel for a similarity: round(255 * (1 - sim)); 0 is black.
std::uint8_t pixel_value(double similarity);

/// Rank, members (or "ALL" when one group holds every candidate), score.
std::string render_ranking_table(const Ranking& ranking);
nlohmann::ordered_json ranking_json(const Ranking& ranking);

nlohmann::ordered_json similarity_json(const SimilarityScore& score, std::string_view a,
                                       std::string_view b, std::string_view context);

std::string matrix_csv(const SimilarityMatrix& matrix);
/// Binary P5 graymap, one pixel per cell.
std::string matrix_pgm(const SimilarityMatrix& matrix);
nlohmann::ordered_json matrix_json(const SimilarityMatrix& matrix, std::string_view context);

nlohmann::ordered_json instance_json(const Instance& instance);

}  // namespace ctxsim
