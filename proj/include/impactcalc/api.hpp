#pragma once

#include "impactcalc/document.hpp"
#include "impactcalc/error.hpp"
#include "impactcalc/store.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace impactcalc::io {

struct ApiResponse {
    int status = 200;
    std::string body;
};

/// Transport-independent request handling for the /api/v1 endpoints. Every
/// JSON body carries `engine_version`; failures are
/// `{"error": {"kind", "message", "path"?, "line"?, "item_id"?}}`.
///
///   POST /api/v1/evaluate         scenario document -> ledger report
///   POST /api/v1/sweep            {scenario, param, values[]}
///   POST /api/v1/breakeven        {scenario, param, lo, hi, tol}
///   POST /api/v1/tornado          {scenario, params[], relative_delta}
///   GET  /api/v1/scenarios/{id}   -> {id, revision, scenario}
///   PUT  /api/v1/scenarios/{id}   {revision, scenario} -> {id, revision}
///   GET  /api/v1/defaults
///   GET  /api/v1/schema
class Api {
public:
    Api(std::shared_ptr<ScenarioStore> store, Defaults defaults);

    ApiResponse handle(std::string_view method, std::string_view path, std::string_view body) const;

    /// 400 for input problems, 404 unknown scenario, 409 revision conflict.
    static int status_for(ErrorKind kind);

private:
    Json evaluate(const Json& body) const;
    Json sweep(const Json& body) const;
    Json break_even(const Json& body) const;
    Json tornado(const Json& body) const;
    Json get_scenario(std::string_view id) const;
    Json put_scenario(std::string_view id, const Json& body) const;

    std::shared_ptr<ScenarioStore> store_;
    Defaults defaults_;
};

}  // namespace impactcalc::io
