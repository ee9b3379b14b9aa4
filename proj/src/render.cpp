#include "ctxsim/render.hpp"

#include <cmath>
#include <cstdlib>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace ctxsim {

using nlohmann::ordered_json;

double round4(double value) {
  return static_cast<double>(std::llround(value * 10000.0)) / 10000.0;
}

std::string format_score(double value) {
  const long long scaled = std::llround(value * 10000.0);
  return fmt::format("{}{}.{:04d}", scaled < 0 ? "-" : "", std::llabs(scaled) / 10000,
                     std::llabs(scaled) % 10000);
}

std::uint8_t pixel_value(double similarity) {
  return static_cast<std::uint8_t>(std::lround(255.0 * (1.0 - similarity)));
}

std::string render_ranking_table(const Ranking& ranking) {
  std::string out = fmt::format("# query={} context={}\nrank\tobjects\tscore\n",
                                ranking.query, ranking.context);
  const bool all = ranking.groups.size() == 1 && ranking.candidate_count() > 1;
  for (std::size_t i = 0; i < ranking.groups.size(); ++i) {
    const auto& g = ranking.groups[i];
    const std::string members = all ? "ALL" : fmt::format("{}", fmt::join(g.ids, " "));
    out += fmt::format("{}\t{}\t{}\n", i + 1, members, format_score(g.score.value()));
  }
  return out;
}

ordered_json ranking_json(const Ranking& ranking) {
  ordered_json groups = ordered_json::array();
  for (std::size_t i = 0; i < ranking.groups.size(); ++i) {
    const auto& g = ranking.groups[i];
    groups.push_back({{"rank", i + 1}, {"ids", g.ids}, {"score", round4(g.score.value())}});
  }
  return {{"query", ranking.query}, {"context", ranking.context}, {"groups", groups}};
}

ordered_json similarity_json(const SimilarityScore& score, std::string_view a,
                             std::string_view b, std::string_view context) {
  ordered_json terms = ordered_json::array();
  for (const auto& t : score.terms) {
    ordered_json term = {{"path", t.path.to_string()},
                         {"entity", t.entity},
                         {"kind", t.is_relation ? "relation" : "attribute"},
                         {"op", to_string(t.op)},
                         {"score", round4(t.score.value())}};
    if (!t.matches.empty()) {
      ordered_json matches = ordered_json::array();
      for (const auto& m : t.matches) {
        matches.push_back({{"from", m.query_element},
                           {"to", m.target_element ? ordered_json(*m.target_element)
                                                   : ordered_json(nullptr)},
                           {"score", round4(m.score.value())}});
      }
      term["matches"] = std::move(matches);
    }
    terms.push_back(std::move(term));
  }
  return {{"a", a},
          {"b", b},
          {"context", context},
          {"value", round4(score.value.value())},
          {"external", round4(score.external.value())},
          {"extensional", round4(score.extensional.value())},
          {"terms", terms}};
}

std::string matrix_csv(const SimilarityMatrix& matrix) {
  std::string out;
  for (const auto& id : matrix.ids()) out += "," + id;
  out += "\n";
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    out += matrix.ids()[r];
    for (std::size_t c = 0; c < matrix.size(); ++c) {
      out += "," + format_score(matrix.at(r, c));
    }
    out += "\n";
  }
  return out;
}

std::string matrix_pgm(const SimilarityMatrix& matrix) {
  std::string out = fmt::format("P5\n{} {}\n255\n", matrix.size(), matrix.size());
  for (double v : matrix.values()) out.push_back(static_cast<char>(pixel_value(v)));
  return out;
}

ordered_json matrix_json(const SimilarityMatrix& matrix, std::string_view context) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < matrix.size(); ++c) row.push_back(round4(matrix.at(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"context", context}, {"ids", matrix.ids()}, {"values", rows}};
}

ordered_json instance_json(const Instance& instance) {
  ordered_json attrs = ordered_json::object();
  for (const auto& [name, values] : instance.attribute_values) {
    ordered_json list = ordered_json::array();
    for (const auto& v : values) {
      std::visit([&](const auto& x) { list.push_back(x); }, v);
    }
    attrs[name] = std::move(list);
  }
  ordered_json rels = ordered_json::object();
  for (const auto& [name, targets] : instance.relation_values) rels[name] = targets;
  return {{"id", instance.id}, {"class", instance.class_name}, {"attrs", attrs},
          {"rels", rels}};
}

}  // namespace ctxsim
