#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "ctxsim/context.hpp"
#include "ctxsim/ontology.hpp"
#include "ctxsim/similarity_engine.hpp"

namespace httplib {
class Server;
}

namespace ctxsim {

/// Named contexts with replace-on-write. Readers get an immutable snapshot
/// that stays valid even if the name is replaced while they hold it.
class ContextRegistry {
 public:
  std::shared_ptr<const ApplicationContext> get(std::string_view name) const;
  std::vector<std::shared_ptr<const ApplicationContext>> list() const;
  /// Returns false when an equal context was already registered (no-op).
  bool put(ApplicationContext context);

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<const ApplicationContext>, std::less<>> contexts_;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

using QueryParams = std::map<std::string, std::string, std::less<>>;

/// Transport-independent request handling for the REST API; `mount` wires
/// the same handlers into an HTTP server.
class Service {
 public:
  Service(std::shared_ptr<const Ontology> ontology,
          std::vector<ApplicationContext> contexts, EngineConfig config = {});

  Response handle(std::string_view method, std::string_view path,
                  const QueryParams& params, std::string_view body = {});

  const SimilarityEngine& engine() const { return engine_; }
  ContextRegistry& registry() { return registry_; }

  void mount(httplib::Server& server);

 private:
  Response get_instances() const;
  Response get_instance(std::string_view id) const;
  Response get_contexts() const;
  Response post_context(std::string_view body);
  Response get_similarity(const QueryParams& params) const;
  Response get_rank(const QueryParams& params) const;
  Response get_matrix(const QueryParams& params, bool pgm) const;

  std::shared_ptr<const ApplicationContext> context_param(const QueryParams& params) const;

  std::shared_ptr<const Ontology> ontology_;
  SimilarityEngine engine_;
  ContextRegistry registry_;
};

/// Parses "host:port" (port 0 picks a free port).
std::pair<std::string, int> parse_bind_address(std::string_view bind);

/// Blocks serving `service` until the server is stopped.
void http_serve(Service& service, const std::string& host, int port);

}  // namespace ctxsim
