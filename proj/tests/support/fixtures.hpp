#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "ctxsim/case_study.hpp"
#include "ctxsim/context.hpp"
#include "ctxsim/ontology.hpp"
#include "random_world.hpp"

namespace ctxsim::testing {

inline std::filesystem::path data_dir() { return CTXSIM_TEST_DATA_DIR; }

/// Loaded once per process.
inline const CaseStudy& alessi() {
  static const CaseStudy study = load_case_study(data_dir());
  return study;
}

struct LoadedWorld {
  std::shared_ptr<const Ontology> ontology;
  ApplicationContext context;
};

inline LoadedWorld load_world(const World& world, const std::string& name = "random") {
  auto onto = std::make_shared<const Ontology>(load_ontology(world.ontology_document()));
  ApplicationContext ctx = parse_context(world.context_document(name), *onto);
  return {std::move(onto), std::move(ctx)};
}

}  // namespace ctxsim::testing
