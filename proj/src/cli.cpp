#include "ctxsim/cli.hpp"

#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ctxsim/case_study.hpp"
#include "ctxsim/context.hpp"
#include "ctxsim/errors.hpp"
#include "ctxsim/ontology.hpp"
#include "ctxsim/render.hpp"
#include "ctxsim/service.hpp"
#include "ctxsim/similarity_engine.hpp"

namespace ctxsim {

namespace {

namespace fs = std::filesystem;

// Relative paths that do not exist are looked up in the bundled dataset.
fs::path resolve(const std::string& path) {
  fs::path p(path);
  if (fs::exists(p) || p.is_absolute()) return p;
  fs::path bundled = default_case_study_dir() / p;
  return fs::exists(bundled) ? bundled : p;
}

struct Inputs {
  std::string ontology = "alessi.onto";
  std::vector<std::string> contexts;
};

void report_error(std::ostream& err, const std::string& source, const Error& e) {
  if (const auto* v = dynamic_cast<const ValidationError*>(&e)) {
    for (const auto& d : v->diagnostics()) {
      err << source << ": " << d.to_string() << "\n";
    }
    return;
  }
  err << source << ": " << e.what() << "\n";
}

// The file currently being read, for error messages.
thread_local std::string current_source;

Ontology read_ontology(const Inputs& in) {
  current_source = in.ontology;
  Ontology onto = load_ontology_file(resolve(in.ontology));
  current_source.clear();
  return onto;
}

ApplicationContext read_context(const std::string& path, const Ontology& onto) {
  current_source = path;
  ApplicationContext ctx = parse_context_file(resolve(path), onto);
  current_source.clear();
  return ctx;
}

int cmd_rank(const Inputs& in, const std::string& query, const std::string& format,
             std::ostream& out) {
  const Ontology onto = read_ontology(in);
  const ApplicationContext ctx = read_context(in.contexts.front(), onto);
  const SimilarityEngine engine(onto);
  const Ranking ranking = engine.rank(ctx, query);
  if (format == "json") {
    out << ranking_json(ranking).dump(2) << "\n";
  } else {
    out << render_ranking_table(ranking);
  }
  return 0;
}

int cmd_matrix(const Inputs& in, const std::string& format, const std::string& output,
               std::ostream& out) {
  const Ontology onto = read_ontology(in);
  const ApplicationContext ctx = read_context(in.contexts.front(), onto);
  const SimilarityEngine engine(onto);
  const SimilarityMatrix matrix =
      engine.similarity_matrix(ctx, engine.matrix_ids(ctx), Execution::Parallel);
  const std::string rendered = format == "pgm" ? matrix_pgm(matrix) : matrix_csv(matrix);
  if (output.empty() || output == "-") {
    out << rendered;
  } else {
    std::ofstream file(output, std::ios::binary);
    file << rendered;
    if (!file) throw Error("cannot write " + output);
  }
  return 0;
}

int cmd_validate(const Inputs& in, std::ostream& out, std::ostream& err) {
  std::unique_ptr<Ontology> onto;
  try {
    onto = std::make_unique<Ontology>(read_ontology(in));
  } catch (const Error& e) {
    report_error(err, in.ontology, e);
    return 2;
  }
  bool ok = true;
  for (const auto& path : in.contexts) {
    try {
      read_context(path, *onto);
    } catch (const Error& e) {
      report_error(err, path, e);
      ok = false;
    }
  }
  if (!ok) return 2;
  out << "OK\n";
  return 0;
}

int cmd_serve(const Inputs& in, const std::string& bind) {
  auto onto = std::make_shared<const Ontology>(read_ontology(in));
  std::vector<ApplicationContext> contexts;
  for (const auto& path : in.contexts) contexts.push_back(read_context(path, *onto));
  Service service(onto, std::move(contexts));
  const auto [host, port] = parse_bind_address(bind);
  http_serve(service, host, port);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Context-dependent asymmetric similarity between ontology instances",
               "ctxsim"};
  app.require_subcommand(1);

  Inputs in;
  std::string query;
  std::string format;
  std::string output;
  std::string bind = "127.0.0.1:8080";

  auto* rank = app.add_subcommand("rank", "Rank every other instance against a query");
  rank->add_option("--ontology", in.ontology, "Ontology document")->capture_default_str();
  rank->add_option("--context", in.contexts, "Context document")->required()->expected(1);
  rank->add_option("--query", query, "Query instance id")->required();
  rank->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->default_str("table");

  auto* matrix = app.add_subcommand("matrix", "Full directed similarity matrix");
  matrix->add_option("--ontology", in.ontology, "Ontology document")->capture_default_str();
  matrix->add_option("--context", in.contexts, "Context document")->required()->expected(1);
  matrix->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "pgm"}))
      ->default_str("csv");
  matrix->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* validate = app.add_subcommand("validate", "Check ontology and context documents");
  validate->add_option("--ontology", in.ontology, "Ontology document")->capture_default_str();
  validate->add_option("--context", in.contexts, "Context documents");

  auto* serve = app.add_subcommand("serve", "Serve the REST API");
  serve->add_option("--ontology", in.ontology, "Ontology document")->capture_default_str();
  serve->add_option("--context", in.contexts, "Context documents (default: part.ctx usage.ctx)");
  serve->add_option("--bind", bind, "host:port to listen on")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  current_source.clear();
  try {
    if (*rank) {
      return cmd_rank(in, query, format.empty() ? "table" : format, out);
    }
    if (*matrix) {
      return cmd_matrix(in, format.empty() ? "csv" : format, output, out);
    }
    if (*validate) {
      return cmd_validate(in, out, err);
    }
    if (in.contexts.empty()) in.contexts = {"part.ctx", "usage.ctx"};
    return cmd_serve(in, bind);
  } catch (const UnknownEntityError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    report_error(err, current_source.empty() ? "error" : current_source, e);
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace ctxsim
