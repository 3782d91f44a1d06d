#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "impactcalc/document.hpp"
#include "impactcalc/error.hpp"
#include "impactcalc/sample.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace impactcalc;
using namespace impactcalc::io;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::filesystem::path kData = IMPACTCALC_DATA_DIR;

const char* kMinimal = R"({
  "schema_version": 1,
  "name": "mini",
  "line_items": [
    {"id": "a", "side": "debit", "provenance": "user",
     "source": {"kind": "literal", "amount": "10.00", "unit": "USD"}},
    {"id": "b", "side": "credit", "provenance": "default",
     "source": {"kind": "literal", "amount": "15", "unit": "USD"}}
  ]
})";

CalcError load_error(const std::string& text) {
    try {
        (void)load_scenario(text);
    } catch (const CalcError& e) {
        return e;
    }
    FAIL("document loaded but should have been rejected");
    throw;
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_CASE("golden scenario survives save and load", "[document]") {
    Scenario golden = sample_scenario();
    Scenario back = load_scenario(save_scenario(golden));
    CHECK(back == golden);
    CHECK(compute_ledger(back).net(Unit::USD) == 883000000_dec);
}

TEST_CASE("shipped sample file matches the built-in sample", "[document]") {
    std::string shipped = slurp(kData / "scenarios" / "sample.json");
    CHECK(shipped == save_scenario(sample_scenario()));
    CHECK(load_scenario_file(kData / "scenarios" / "sample.json") == sample_scenario());
}

TEST_CASE("minimal document with defaults", "[document]") {
    Scenario s = load_scenario(kMinimal);
    CHECK(s.currency == "USD");
    CHECK(s.parameters.empty());
    REQUIRE(s.line_items.size() == 2);
    CHECK(s.line_items[0].horizon_years == 1);
    CHECK(s.line_items[0].label.empty());
    CHECK(compute_ledger(s).net(Unit::USD) == 5_dec);
}

TEST_CASE("property: random scenarios round-trip bit-identically", "[document][property]") {
    impactcalc::testing::Gen gen(71);
    for (int i = 0; i < 100; ++i) {
        Scenario s = gen.scenario(25);
        std::string text = save_scenario(s);
        Scenario back = load_scenario(text);
        CHECK(back == s);
        CHECK(save_scenario(back) == text);
        CHECK(compute_ledger(back) == compute_ledger(s));
    }
}

TEST_CASE("amounts are strings in fixed-point form", "[document]") {
    std::string text = save_scenario(sample_scenario());
    CHECK(text.find("\"75000000.00\"") != std::string::npos);
    CHECK(text.find("e+") == std::string::npos);
    CHECK(text.find("E+") == std::string::npos);

    CalcError e = load_error(replace(kMinimal, "\"10.00\"", "10.0"));
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(e.path() == "$.line_items[0].source.amount");
}

TEST_CASE("strict loading names the offending path", "[document]") {
    struct Case {
        std::string from, to;
        ErrorKind kind;
        const char* path;
    };
    const Case cases[] = {
        {"\"name\": \"mini\"", "\"name\": \"mini\", \"extra\": 1", ErrorKind::ParseError, "$.extra"},
        {"\"kind\": \"literal\", \"amount\": \"15\"", "\"kind\": \"literal\", \"amount\": \"1.5e3\"",
         ErrorKind::ParseError, "$.line_items[1].source.amount"},
        {"\"side\": \"debit\"", "\"side\": \"sideways\"", ErrorKind::ParseError, "$.line_items[0].side"},
        {"\"provenance\": \"default\"", "\"provenance\": \"guess\"", ErrorKind::ParseError,
         "$.line_items[1].provenance"},
        {"\"unit\": \"USD\"}}", "\"unit\": \"EUR\"}}", ErrorKind::ParseError, "$.line_items[0].source.unit"},
        {"\"provenance\": \"user\",", "\"provenance\": \"user\", \"colour\": \"red\",", ErrorKind::ParseError,
         "$.line_items[0].colour"},
        {"\"id\": \"b\"", "\"id\": \"a\"", ErrorKind::ValidationError, "$.line_items[1]"},
        {"\"amount\": \"10.00\"", "\"amount\": \"10.001\"", ErrorKind::ValidationError, "$.line_items[0]"},
        {"\"id\": \"a\", ", "", ErrorKind::ParseError, "$.line_items[0].id"},
    };
    for (const auto& c : cases) {
        INFO(c.to);
        CalcError e = load_error(replace(kMinimal, c.from, c.to));
        CHECK(e.kind() == c.kind);
        CHECK(e.path() == c.path);
    }
}

TEST_CASE("validation failures carry the item id", "[document]") {
    std::string doc = replace(kMinimal, "\"source\": {\"kind\": \"literal\", \"amount\": \"15\", \"unit\": \"USD\"}",
                              "\"source\": {\"kind\": \"derived\", \"formula\": \"gdp_gain\", \"args\": {}}");
    CalcError e = load_error(doc);
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(e.item_id() == "b");
    CHECK(e.path() == "$.line_items[1]");
}

TEST_CASE("syntax errors report a line", "[document]") {
    std::string broken = "{\n  \"schema_version\": 1,\n  \"name\": \"x\"\n  \"line_items\": []\n}\n";
    CalcError e = load_error(broken);
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(e.line() == 4);
}

TEST_CASE("unsupported schema version", "[document]") {
    CalcError e = load_error(replace(kMinimal, "\"schema_version\": 1", "\"schema_version\": 2"));
    CHECK(e.kind() == ErrorKind::UnsupportedVersion);
    CalcError missing = load_error(replace(kMinimal, "\"schema_version\": 1,", ""));
    CHECK(missing.kind() == ErrorKind::ParseError);
    CHECK(missing.path() == "$.schema_version");
}

TEST_CASE("schema is valid JSON and names the version", "[document]") {
    Json schema = Json::parse(scenario_schema());
    CHECK(schema.contains("$schema"));
    CHECK(schema.dump().find("schema_version") != std::string::npos);
}

TEST_CASE("report serialization", "[document]") {
    Json j = report_to_json(compute_ledger(sample_scenario()));
    CHECK(j["units"]["USD"]["net"] == "883000000.00");
    CHECK(j["units"]["USD"]["subtotal_debits"] == "75000000.00");
    CHECK(j["units"]["USD"]["subtotal_credits"] == "958000000.00");
    CHECK(j["units"]["Lives"]["net"] == "23790");
    CHECK(j["units"]["BasisPoints"]["net"] == "0.05");
    CHECK(j["items"][6]["per_year"] == "7930");
    CHECK(j["items"][1]["amount"] == "TBD");
    CHECK(j["tbd_items"].size() == 6);
}

TEST_CASE("defaults documents", "[document]") {
    Defaults d;
    d.tmit.push_back({hai::BedSize::Medium, "Northeast", false, hai::InfectionType::VAP, 25000_dec, 6.1_dec});
    d.edweek.push_back({"OH", 1700000, 20000000000_dec});
    CHECK(defaults_from_json(defaults_to_json(d)) == d);
    CHECK(load_defaults_file(kData / "defaults.json") == Defaults{});
}

TEST_CASE("TMIT request falls back to defaults", "[document]") {
    Defaults d;
    d.tmit.push_back({hai::BedSize::Medium, "Northeast", false, hai::InfectionType::VAP, 25000_dec, 6.1_dec});
    Json doc = Json::parse(R"({
      "profile": {"bed_size": "medium", "region": "Northeast", "teaching": false},
      "entries": [{"infection_type": "VAP", "infections_per_year": 10},
                  {"infection_type": "SSI", "infections_per_year": 3}]
    })");
    TmitRequest req = tmit_request_from_json(doc, d);
    hai::TmitReport r = hai::tmit_report(req.profile, req.entries);
    CHECK(r.total_cost == 250000_dec);
    CHECK(r.line(hai::InfectionType::SSI).annual_cost.is_zero());
}

TEST_CASE("EdWeek request falls back to state defaults", "[document]") {
    Defaults d;
    d.edweek.push_back({"OH", 1000, 5000000_dec});
    Json doc = Json::parse(R"({"state": "OH", "pct_without_internet": "0.5", "per_student_internet_cost": "100",
                               "revenue_cut_y1": "0.1"})");
    edweek::EdweekBreakdown b = edweek::edweek_cost(edweek_input_from_json(doc, d));
    CHECK(b.internet == 50000_dec);
    CHECK(b.revenue_loss_y1 == 500000_dec);
}
