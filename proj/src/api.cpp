#include "impactcalc/api.hpp"

#include "impactcalc/analysis.hpp"
#include "impactcalc/error.hpp"
#include "impactcalc/version.hpp"

namespace impactcalc::io {

namespace {

constexpr std::string_view kPrefix = "/api/v1/";

ApiResponse respond(int status, Json body) {
    Json out;
    out["engine_version"] = std::string(kEngineVersion);
    for (auto& [k, v] : body.items()) out[k] = std::move(v);
    return {status, out.dump()};
}

ApiResponse error_response(int status, std::string_view kind, const std::string& message,
                           const CalcError* e = nullptr) {
    Json err{{"kind", std::string(kind)}, {"message", message}};
    if (e) {
        if (e->path()) err["path"] = *e->path();
        if (e->line()) err["line"] = *e->line();
        if (e->item_id()) err["item_id"] = *e->item_id();
    }
    return respond(status, Json{{"error", std::move(err)}});
}

Scenario scenario_field(const Json& body) {
    return scenario_from_json(require_field(body, "scenario", "$"), "$.scenario");
}

std::string param_field(const Json& body, const char* key = "param") {
    return string_from_json(require_field(body, key, "$"), "$." + std::string(key));
}

}  // namespace

Api::Api(std::shared_ptr<ScenarioStore> store, Defaults defaults)
    : store_(std::move(store)), defaults_(std::move(defaults)) {}

int Api::status_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotFound: return 404;
        case ErrorKind::RevisionConflict: return 409;
        default: return 400;
    }
}

Json Api::evaluate(const Json& body) const {
    return {{"report", report_to_json(compute_ledger(scenario_from_json(body)))}};
}

Json Api::sweep(const Json& body) const {
    reject_unknown_fields(body, {"scenario", "param", "values"}, "$");
    Scenario s = scenario_field(body);
    std::string path = param_field(body);
    const Json& values = require_field(body, "values", "$");
    if (!values.is_array()) throw CalcError(ErrorKind::ParseError, "expected an array").with_path("$.values");
    std::vector<Decimal> vs;
    for (std::size_t i = 0; i < values.size(); ++i) {
        vs.push_back(decimal_from_json(values[i], "$.values[" + std::to_string(i) + "]"));
    }
    return sweep_to_json(impactcalc::sweep(s, path, vs));
}

Json Api::break_even(const Json& body) const {
    reject_unknown_fields(body, {"scenario", "param", "lo", "hi", "tol"}, "$");
    Scenario s = scenario_field(body);
    std::string path = param_field(body);
    Decimal lo = decimal_from_json(require_field(body, "lo", "$"), "$.lo");
    Decimal hi = decimal_from_json(require_field(body, "hi", "$"), "$.hi");
    Decimal tol = decimal_from_json(require_field(body, "tol", "$"), "$.tol");
    return break_even_to_json(path, impactcalc::break_even(s, path, lo, hi, tol));
}

Json Api::tornado(const Json& body) const {
    reject_unknown_fields(body, {"scenario", "params", "relative_delta"}, "$");
    Scenario s = scenario_field(body);
    const Json& params = require_field(body, "params", "$");
    if (!params.is_array()) throw CalcError(ErrorKind::ParseError, "expected an array").with_path("$.params");
    std::vector<std::string> paths;
    for (std::size_t i = 0; i < params.size(); ++i) {
        paths.push_back(string_from_json(params[i], "$.params[" + std::to_string(i) + "]"));
    }
    Decimal delta = decimal_from_json(require_field(body, "relative_delta", "$"), "$.relative_delta");
    return tornado_to_json(impactcalc::tornado(s, paths, delta));
}

Json Api::get_scenario(std::string_view id) const {
    auto entry = store_->get(id);
    if (!entry) throw CalcError(ErrorKind::NotFound, "no scenario '" + std::string(id) + "'");
    return {{"id", std::string(id)}, {"revision", entry->revision}, {"scenario", scenario_to_json(entry->scenario)}};
}

Json Api::put_scenario(std::string_view id, const Json& body) const {
    reject_unknown_fields(body, {"revision", "scenario"}, "$");
    std::uint64_t expected = count_from_json(require_field(body, "revision", "$"), "$.revision");
    Scenario s = scenario_field(body);
    std::uint64_t revision = store_->put(id, expected, s);
    return {{"id", std::string(id)}, {"revision", revision}};
}

ApiResponse Api::handle(std::string_view method, std::string_view path, std::string_view body) const {
    if (path.substr(0, kPrefix.size()) != kPrefix) return error_response(404, "NotFound", "no such endpoint");
    std::string_view route = path.substr(kPrefix.size());

    try {
        if (method == "POST" && (route == "evaluate" || route == "sweep" || route == "breakeven" || route == "tornado")) {
            Json request = parse_json(body);
            if (route == "evaluate") return respond(200, evaluate(request));
            if (route == "sweep") return respond(200, sweep(request));
            if (route == "breakeven") return respond(200, break_even(request));
            return respond(200, tornado(request));
        }
        if (method == "GET" && route == "defaults") return respond(200, Json{{"defaults", defaults_to_json(defaults_)}});
        if (method == "GET" && route == "schema") return respond(200, Json{{"schema", Json::parse(scenario_schema())}});

        constexpr std::string_view kScenarios = "scenarios/";
        if (route.substr(0, kScenarios.size()) == kScenarios) {
            std::string_view id = route.substr(kScenarios.size());
            if (!ScenarioStore::valid_id(id)) {
                return error_response(400, "ValidationError", "scenario id must be 1-64 characters of [A-Za-z0-9_-]");
            }
            if (method == "GET") return respond(200, get_scenario(id));
            if (method == "PUT") return respond(200, put_scenario(id, parse_json(body)));
            return error_response(405, "MethodNotAllowed", "use GET or PUT");
        }
        for (std::string_view known : {"evaluate", "sweep", "breakeven", "tornado", "defaults", "schema"}) {
            if (route == known) return error_response(405, "MethodNotAllowed", "wrong method for this endpoint");
        }
        return error_response(404, "NotFound", "no such endpoint");
    } catch (const CalcError& e) {
        return error_response(status_for(e.kind()), to_string(e.kind()), e.what(), &e);
    } catch (const std::exception& e) {
        return error_response(500, "InternalError", e.what());
    }
}

}  // namespace impactcalc::io
