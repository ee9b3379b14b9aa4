#include <gtest/gtest.h>

#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "ctxsim/service.hpp"
#include "fixtures.hpp"

using namespace ctxsim;
using ctxsim::testing::alessi;
using nlohmann::json;

namespace {

Service make_service() {
  return Service(alessi().ontology, {alessi().part, alessi().usage});
}

json body_of(const Response& r) { return json::parse(r.body); }

}  // namespace

TEST(ContextRegistry, PutIsIdempotent) {
  ContextRegistry reg;
  EXPECT_TRUE(reg.put(alessi().usage));
  EXPECT_FALSE(reg.put(alessi().usage));
  EXPECT_EQ(reg.list().size(), 1u);
  EXPECT_EQ(reg.get("usage")->name(), "usage");
  EXPECT_EQ(reg.get("part"), nullptr);
}

TEST(Service, Instances) {
  Service s = make_service();
  const Response all = s.handle("GET", "/api/instances", {});
  EXPECT_EQ(all.status, 200);
  EXPECT_EQ(body_of(all).size(), alessi().ontology->instances().size());

  const Response one = s.handle("GET", "/api/instances/Jug_24", {});
  EXPECT_EQ(one.status, 200);
  EXPECT_EQ(body_of(one)["class"], "Object");

  EXPECT_EQ(s.handle("GET", "/api/instances/Vase_1", {}).status, 404);
}

TEST(Service, Rank) {
  Service s = make_service();
  const Response r = s.handle("GET", "/api/rank", {{"query", "WateringCan_1"}, {"context", "usage"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "application/json");
  const json j = body_of(r);
  EXPECT_EQ(j["groups"][0]["ids"], json({"Kettles_19", "Kettles_20"}));
  EXPECT_EQ(j["groups"][0]["score"].get<double>(), 0.8333);
}

TEST(Service, Similarity) {
  Service s = make_service();
  const Response r =
      s.handle("GET", "/api/similarity", {{"a", "Jug_24"}, {"b", "Jug_26"}, {"context", "usage"}});
  ASSERT_EQ(r.status, 200);
  const json j = body_of(r);
  EXPECT_EQ(j["value"].get<double>(), 0.9778);
  EXPECT_EQ(j["external"].get<double>(), 1.0);
  EXPECT_EQ(j["extensional"].get<double>(), 0.9778);
  EXPECT_FALSE(j["terms"].empty());
}

TEST(Service, Matrix) {
  Service s = make_service();
  const Response r = s.handle("GET", "/api/matrix", {{"context", "part"}});
  ASSERT_EQ(r.status, 200);
  const json j = body_of(r);
  EXPECT_EQ(j["ids"].size(), 9u);
  EXPECT_EQ(j["values"][0][0].get<double>(), 1.0);

  const Response pgm = s.handle("GET", "/api/matrix.pgm", {{"context", "part"}});
  EXPECT_EQ(pgm.status, 200);
  EXPECT_EQ(pgm.content_type, "image/x-portable-graymap");
  EXPECT_EQ(pgm.body.substr(0, 2), "P5");
}

TEST(Service, ErrorStatuses) {
  Service s = make_service();
  EXPECT_EQ(s.handle("GET", "/api/nothing", {}).status, 404);
  EXPECT_EQ(s.handle("DELETE", "/api/rank", {}).status, 405);
  EXPECT_EQ(s.handle("GET", "/api/rank", {{"context", "usage"}}).status, 400);
  EXPECT_EQ(s.handle("GET", "/api/rank", {{"query", "Jug_24"}, {"context", "shape"}}).status, 404);
  EXPECT_EQ(s.handle("GET", "/api/rank", {{"query", "Ghost"}, {"context", "usage"}}).status, 404);
  EXPECT_EQ(s.handle("GET", "/api/rank", {{"query", "Neck_52"}, {"context", "usage"}}).status, 422);
  EXPECT_EQ(s.handle("POST", "/api/contexts", {}, "{not json").status, 400);
}

TEST(Service, PostInvalidContextReportsDiagnostics) {
  Service s = make_service();
  const json doc = {{"name", "broken"},
                    {"entries",
                     {{{"path", {{"start", "Object"}, {"relations", json::array()}}},
                       {"rels", {{{"name", "hasPart"}, {"op", "simil"}}}}}}}};
  const Response r = s.handle("POST", "/api/contexts", {}, doc.dump());
  EXPECT_EQ(r.status, 422);
  const json j = body_of(r);
  ASSERT_EQ(j["diagnostics"].size(), 1u);
  EXPECT_NE(j["diagnostics"][0]["message"].get<std::string>().find("[Object.hasPart]"),
            std::string::npos);
  EXPECT_EQ(s.registry().get("broken"), nullptr);
}

TEST(Service, PostContextRoundTripAndIdempotence) {
  Service s = make_service();
  json usage = json::parse(serialize_context(alessi().usage));
  const Response same = s.handle("POST", "/api/contexts", {}, usage.dump());
  ASSERT_EQ(same.status, 200);
  EXPECT_EQ(body_of(same)["changed"], false);

  // Dropping the capacity term changes the ranking.
  auto& attrs = usage["entries"][0]["attrs"];
  attrs.erase(std::remove_if(attrs.begin(), attrs.end(),
                             [](const json& t) { return t["name"] == "liquidCapacityInLiters"; }),
              attrs.end());
  usage["name"] = "usage2";
  const Response posted = s.handle("POST", "/api/contexts", {}, usage.dump());
  ASSERT_EQ(posted.status, 200);
  EXPECT_EQ(body_of(posted)["changed"], true);

  const json before = body_of(s.handle("GET", "/api/rank", {{"query", "WateringCan_1"}, {"context", "usage"}}));
  const json after = body_of(s.handle("GET", "/api/rank", {{"query", "WateringCan_1"}, {"context", "usage2"}}));
  EXPECT_NE(before["groups"], after["groups"]);

  const json listed = body_of(s.handle("GET", "/api/contexts", {}));
  bool found = false;
  for (const auto& c : listed) {
    if (c["name"] == "usage2") {
      found = true;
      EXPECT_EQ(parse_context(c.dump(), *alessi().ontology),
                parse_context(usage.dump(), *alessi().ontology));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Service, BindAddress) {
  EXPECT_EQ(parse_bind_address("127.0.0.1:8080"), (std::pair<std::string, int>{"127.0.0.1", 8080}));
  EXPECT_EQ(parse_bind_address("localhost:0").second, 0);
  EXPECT_THROW(parse_bind_address("8080"), std::invalid_argument);
  EXPECT_THROW(parse_bind_address("host:99999"), std::invalid_argument);
  EXPECT_THROW(parse_bind_address("host:80x"), std::invalid_argument);
}

TEST(Service, ServesOverHttp) {
  Service s = make_service();
  httplib::Server server;
  s.mount(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  ASSERT_GT(port, 0);
  std::thread runner([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto res = client.Get("/api/rank?query=WateringCan_1&context=usage");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  EXPECT_EQ(json::parse(res->body)["groups"][0]["score"].get<double>(), 0.8333);

  auto bad = client.Post("/api/contexts", "{}", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);

  auto pre = client.Options("/api/contexts");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, 204);

  server.stop();
  runner.join();
}
