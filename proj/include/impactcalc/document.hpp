#pragma once

#include "impactcalc/analysis.hpp"
#include "impactcalc/edweek.hpp"
#include "impactcalc/hai.hpp"
#include "impactcalc/ledger.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace impactcalc::io {

using Json = nlohmann::ordered_json;

/// Scenario documents carry this version; anything else is rejected.
inline constexpr int kSchemaVersion = 1;

// Scenario documents. Amounts and parameters are JSON strings of decimal
// digits so no value ever passes through binary floating point. Loading is
// strict: unknown fields, wrong types and invariant breaches are errors
// that name the offending document path.

Json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const Json& doc, const std::string& path = "$");
std::string save_scenario(const Scenario& scenario);
/// Throws ParseError (with line for syntax errors, path otherwise),
/// UnsupportedVersion or ValidationError.
Scenario load_scenario(std::string_view text);

Scenario load_scenario_file(const std::filesystem::path& file);
void save_scenario_file(const std::filesystem::path& file, const Scenario& scenario);

/// JSON Schema (draft 2020-12) describing the scenario document.
const std::string& scenario_schema();

/// Parses text as JSON, mapping syntax errors to ParseError with a line.
Json parse_json(std::string_view text);

// Field helpers shared by the request decoders.
const Json& require_field(const Json& obj, std::string_view key, const std::string& path);
void reject_unknown_fields(const Json& obj, std::initializer_list<std::string_view> allowed,
                           const std::string& path);
Decimal decimal_from_json(const Json& value, const std::string& path);
std::string string_from_json(const Json& value, const std::string& path);
std::uint64_t count_from_json(const Json& value, const std::string& path);

/// Fixed-point amount text: USD always carries exactly two fractional
/// digits, other units print exactly.
std::string amount_text(const Decimal& amount, Unit unit);

Json report_to_json(const LedgerReport& report);
Json sweep_to_json(const SweepResult& result);
Json break_even_to_json(const std::string& path, const BreakEvenResult& result);
Json tornado_to_json(const std::vector<TornadoBar>& bars);

// Sub-calculator defaults (TMIT-APIC per-infection rates, EdWeek per-state
// fallbacks). Same document family as scenarios.

struct Defaults {
    std::vector<hai::TmitDefault> tmit;
    std::vector<edweek::StateDefault> edweek;
    friend bool operator==(const Defaults&, const Defaults&) = default;
};

Json defaults_to_json(const Defaults& defaults);
Defaults defaults_from_json(const Json& doc);
Defaults load_defaults(std::string_view text);
Defaults load_defaults_file(const std::filesystem::path& file);

// Sub-calculator request documents, shared by the CLI.

struct TmitRequest {
    hai::HospitalProfile profile;
    std::vector<hai::InfectionEntry> entries;
};

/// Entries may omit per-infection cost and LOS; those come from `defaults`
/// for the profile's category, or zero when no default matches.
TmitRequest tmit_request_from_json(const Json& doc, const Defaults& defaults);
Json tmit_report_to_json(const hai::TmitReport& report);

/// `enrolled_students` and `annual_revenue` fall back to the state default.
edweek::EdweekInput edweek_input_from_json(const Json& doc, const Defaults& defaults);
Json edweek_breakdown_to_json(const edweek::EdweekBreakdown& breakdown);

}  // namespace impactcalc::io
