#include "ctxsim/service.hpp"

#include <charconv>
#include <stdexcept>
#include <utility>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "ctxsim/errors.hpp"
#include "ctxsim/render.hpp"

namespace ctxsim {

using nlohmann::ordered_json;

std::shared_ptr<const ApplicationContext> ContextRegistry::get(std::string_view name) const {
  std::shared_lock lock(mutex_);
  auto it = contexts_.find(name);
  return it == contexts_.end() ? nullptr : it->second;
}

std::vector<std::shared_ptr<const ApplicationContext>> ContextRegistry::list() const {
  std::shared_lock lock(mutex_);
  std::vector<std::shared_ptr<const ApplicationContext>> out;
  for (const auto& [_, ctx] : contexts_) out.push_back(ctx);
  return out;
}

bool ContextRegistry::put(ApplicationContext context) {
  auto fresh = std::make_shared<const ApplicationContext>(std::move(context));
  std::unique_lock lock(mutex_);
  auto& slot = contexts_[fresh->name()];
  if (slot && *slot == *fresh) return false;
  slot = std::move(fresh);
  return true;
}

namespace {

struct BadRequest : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Response json_response(int status, const ordered_json& body) {
  return {status, "application/json", body.dump()};
}

Response error_response(int status, const std::string& message,
                        const std::vector<Diagnostic>& diagnostics = {}) {
  ordered_json body = {{"error", message}};
  if (!diagnostics.empty()) {
    ordered_json list = ordered_json::array();
    for (const auto& d : diagnostics) {
      list.push_back({{"subject", d.subject}, {"message", d.message}});
    }
    body["diagnostics"] = std::move(list);
  }
  return json_response(status, body);
}

const std::string& required(const QueryParams& params, std::string_view key) {
  auto it = params.find(key);
  if (it == params.end() || it->second.empty()) {
    throw BadRequest("missing query parameter '" + std::string(key) + "'");
  }
  return it->second;
}

}  // namespace

Service::Service(std::shared_ptr<const Ontology> ontology,
                 std::vector<ApplicationContext> contexts, EngineConfig config)
    : ontology_(std::move(ontology)), engine_(*ontology_, config) {
  for (auto& ctx : contexts) registry_.put(std::move(ctx));
}

std::shared_ptr<const ApplicationContext> Service::context_param(
    const QueryParams& params) const {
  const std::string& name = required(params, "context");
  auto ctx = registry_.get(name);
  if (!ctx) throw UnknownEntityError("context", name);
  return ctx;
}

Response Service::handle(std::string_view method, std::string_view path,
                         const QueryParams& params, std::string_view body) {
  spdlog::debug("{} {}", method, path);
  constexpr std::string_view kInstancePrefix = "/api/instances/";
  try {
    const bool get = method == "GET";
    if (path == "/api/instances") {
      if (get) return get_instances();
    } else if (path.starts_with(kInstancePrefix) && path.size() > kInstancePrefix.size()) {
      if (get) return get_instance(path.substr(kInstancePrefix.size()));
    } else if (path == "/api/contexts") {
      if (get) return get_contexts();
      if (method == "POST") return post_context(body);
    } else if (path == "/api/similarity") {
      if (get) return get_similarity(params);
    } else if (path == "/api/rank") {
      if (get) return get_rank(params);
    } else if (path == "/api/matrix") {
      if (get) return get_matrix(params, false);
    } else if (path == "/api/matrix.pgm") {
      if (get) return get_matrix(params, true);
    } else {
      return error_response(404, "no such endpoint " + std::string(path));
    }
    return error_response(405, "method " + std::string(method) + " not allowed on " +
                                   std::string(path));
  } catch (const BadRequest& e) {
    return error_response(400, e.what());
  } catch (const UnknownEntityError& e) {
    return error_response(404, e.what());
  } catch (const PreconditionError& e) {
    return error_response(422, e.what());
  } catch (const ValidationError& e) {
    return error_response(422, "context validation failed", e.diagnostics());
  } catch (const ParseError& e) {
    return error_response(400, e.what());
  } catch (const std::exception& e) {
    spdlog::error("{} {} failed: {}", method, path, e.what());
    return error_response(500, e.what());
  }
}

Response Service::get_instances() const {
  ordered_json list = ordered_json::array();
  for (const auto& inst : ontology_->instances()) list.push_back(instance_json(inst));
  return json_response(200, list);
}

Response Service::get_instance(std::string_view id) const {
  return json_response(200, instance_json(ontology_->instance(id)));
}

Response Service::get_contexts() const {
  ordered_json list = ordered_json::array();
  for (const auto& ctx : registry_.list()) {
    list.push_back(ordered_json::parse(serialize_context(*ctx)));
  }
  return json_response(200, list);
}

Response Service::post_context(std::string_view body) {
  ApplicationContext ctx = parse_context(body, *ontology_);
  const std::string name = ctx.name();
  const bool changed = registry_.put(std::move(ctx));
  spdlog::info("context '{}' {}", name, changed ? "registered" : "unchanged");
  return json_response(200, {{"name", name}, {"changed", changed}});
}

Response Service::get_similarity(const QueryParams& params) const {
  const auto ctx = context_param(params);
  const std::string& a = required(params, "a");
  const std::string& b = required(params, "b");
  return json_response(200, similarity_json(engine_.sim(*ctx, a, b), a, b, ctx->name()));
}

Response Service::get_rank(const QueryParams& params) const {
  const auto ctx = context_param(params);
  return json_response(200, ranking_json(engine_.rank(*ctx, required(params, "query"))));
}

Response Service::get_matrix(const QueryParams& params, bool pgm) const {
  const auto ctx = context_param(params);
  const SimilarityMatrix matrix =
      engine_.similarity_matrix(*ctx, engine_.matrix_ids(*ctx), Execution::Parallel);
  if (pgm) return {200, "image/x-portable-graymap", matrix_pgm(matrix)};
  return json_response(200, matrix_json(matrix, ctx->name()));
}

void Service::mount(httplib::Server& server) {
  auto bridge = [this](const httplib::Request& req, httplib::Response& res) {
    QueryParams params;
    for (const auto& [key, value] : req.params) params.emplace(key, value);
    Response out = handle(req.method, req.path, params, req.body);
    res.status = out.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(out.body, out.content_type);
  };
  server.Get(".*", bridge);
  server.Post(".*", bridge);
  server.Options(".*", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
}

std::pair<std::string, int> parse_bind_address(std::string_view bind) {
  const auto colon = bind.rfind(':');
  if (colon == std::string_view::npos || colon == 0) {
    throw std::invalid_argument("bind address must be host:port");
  }
  int port = -1;
  const auto digits = bind.substr(colon + 1);
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), port);
  if (ec != std::errc{} || end != digits.data() + digits.size() || port < 0 ||
      port > 65535) {
    throw std::invalid_argument("invalid port in bind address");
  }
  return {std::string(bind.substr(0, colon)), port};
}

void http_serve(Service& service, const std::string& host, int port) {
  httplib::Server server;
  service.mount(server);
  if (port == 0) {
    port = server.bind_to_any_port(host);
  } else if (!server.bind_to_port(host, port)) {
    port = -1;
  }
  if (port < 0) {
    throw Error("cannot bind " + host);
  }
  spdlog::info("listening on http://{}:{}", host, port);
  server.listen_after_bind();
}

}  // namespace ctxsim
