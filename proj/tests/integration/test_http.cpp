#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "temp_dir.hpp"
#include "impactcalc/server.hpp"
#include "impactcalc/sample.hpp"
#include "impactcalc/version.hpp"

#include <httplib.h>

#include <future>

using namespace impactcalc;
using namespace impactcalc::io;
using impactcalc::testing::TempDir;

namespace {

struct LiveServer {
    TempDir dir;
    HttpServer server{Api(std::make_shared<ScenarioStore>(dir.path()), Defaults{})};
    int port = server.start("127.0.0.1", 0);

    httplib::Client client() const {
        httplib::Client c("127.0.0.1", port);
        c.set_read_timeout(10, 0);
        return c;
    }
};

}  // namespace

TEST_CASE("server answers the evaluate endpoint", "[http]") {
    LiveServer s;
    REQUIRE(s.port > 0);
    auto c = s.client();
    auto res = c.Post("/api/v1/evaluate", scenario_to_json(sample_scenario()).dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->get_header_value("X-Engine-Version") == kEngineVersion);
    CHECK(res->get_header_value("Content-Type").rfind("application/json", 0) == 0);
    Json j = Json::parse(res->body);
    CHECK(j["report"]["units"]["USD"]["net"] == "883000000.00");
    CHECK(j["engine_version"] == kEngineVersion);
}

TEST_CASE("server status codes", "[http]") {
    LiveServer s;
    auto c = s.client();
    auto bad = c.Post("/api/v1/evaluate", "{", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);
    auto missing = c.Get("/api/v1/scenarios/none");
    REQUIRE(missing);
    CHECK(missing->status == 404);
    auto wrong = c.Delete("/api/v1/scenarios/none");
    REQUIRE(wrong);
    CHECK(wrong->status == 405);

    Json put{{"revision", 0}, {"scenario", scenario_to_json(sample_scenario())}};
    auto created = c.Put("/api/v1/scenarios/golden", put.dump(), "application/json");
    REQUIRE(created);
    CHECK(created->status == 200);
    auto stale = c.Put("/api/v1/scenarios/golden", put.dump(), "application/json");
    REQUIRE(stale);
    CHECK(stale->status == 409);
}

TEST_CASE("concurrent evaluations return identical bodies", "[http]") {
    LiveServer s;
    std::string body = scenario_to_json(sample_scenario()).dump();
    std::string expected = Api(std::make_shared<ScenarioStore>(s.dir.path()), Defaults{})
                               .handle("POST", "/api/v1/evaluate", body)
                               .body;
    std::vector<std::future<std::string>> calls;
    for (int i = 0; i < 16; ++i) {
        calls.push_back(std::async(std::launch::async, [&] {
            auto c = s.client();
            auto res = c.Post("/api/v1/evaluate", body, "application/json");
            return res ? res->body : std::string();
        }));
    }
    for (auto& f : calls) CHECK(f.get() == expected);
}

TEST_CASE("sweep over HTTP equals direct sweep", "[http]") {
    LiveServer s;
    auto c = s.client();
    impactcalc::testing::Gen gen(91);
    for (int i = 0; i < 10; ++i) {
        Scenario sc = sample_scenario();
        std::vector<Decimal> vs{gen.fraction(), gen.fraction()};
        Json body{{"scenario", scenario_to_json(sc)}, {"param", "e.reduction_fraction"}, {"values", Json::array()}};
        for (const auto& v : vs) body["values"].push_back(v.to_string());
        auto res = c.Post("/api/v1/sweep", body.dump(), "application/json");
        REQUIRE(res);
        Json j = Json::parse(res->body);
        j.erase("engine_version");
        CHECK(j == sweep_to_json(sweep(sc, "e.reduction_fraction", vs)));
    }
}

TEST_CASE("store path precedence", "[http]") {
    ::setenv("IMPACTCALC_STORE", "/tmp/somewhere", 1);
    CHECK(default_store_path() == "/tmp/somewhere");
    ::unsetenv("IMPACTCALC_STORE");
    CHECK(default_store_path() == "scenarios");
}
