#include "impactcalc/document.hpp"

#include "impactcalc/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace impactcalc::io {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& why) {
    throw CalcError(ErrorKind::ParseError, why).with_path(path);
}

std::string key_path(const std::string& path, std::string_view key) { return path + "." + std::string(key); }
std::string index_path(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const Json& require_object(const Json& j, const std::string& path) {
    if (!j.is_object()) bad(path, "expected an object");
    return j;
}

const Json& require_array(const Json& j, const std::string& path) {
    if (!j.is_array()) bad(path, "expected an array");
    return j;
}

const Json* optional_field(const Json& obj, std::string_view key) {
    auto it = obj.find(std::string(key));
    return it == obj.end() ? nullptr : &*it;
}

bool bool_from_json(const Json& j, const std::string& path) {
    if (!j.is_boolean()) bad(path, "expected true or false");
    return j.get<bool>();
}

// Rethrows engine enum parse failures with the document path.
template <typename F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const CalcError& e) {
        if (e.path()) throw;
        throw e.with_path(path);
    }
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw CalcError(ErrorKind::NotFound, "cannot open " + file.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json source_to_json(const ValueSource& source) {
    Json j;
    std::visit(
        [&](const auto& src) {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, LiteralSource>) {
                j["kind"] = "literal";
                j["amount"] = src.value.is_tbd() ? std::string("TBD")
                                                 : amount_text(src.value.amount(), src.value.unit());
                j["unit"] = std::string(to_string(src.value.unit()));
            } else if constexpr (std::is_same_v<T, DerivedSource>) {
                j["kind"] = "derived";
                j["formula"] = src.formula;
                Json args = Json::object();
                for (const auto& [k, v] : src.args) args[k] = v.to_string();
                j["args"] = std::move(args);
                if (!src.factors.empty()) j["factors"] = src.factors;
                if (src.unit) j["unit"] = std::string(to_string(*src.unit));
            } else {
                j["kind"] = "tbd";
            }
        },
        source);
    return j;
}

ParameterMap parameters_from_json(const Json& j, const std::string& path) {
    require_object(j, path);
    ParameterMap out;
    for (const auto& [k, v] : j.items()) {
        std::string p = key_path(path, k);
        if (!is_valid_identifier(k)) bad(p, "invalid name '" + k + "'");
        out.emplace(k, decimal_from_json(v, p));
    }
    return out;
}

ValueSource source_from_json(const Json& j, const std::string& path) {
    require_object(j, path);
    std::string kind = string_from_json(require_field(j, "kind", path), key_path(path, "kind"));
    if (kind == "tbd") {
        reject_unknown_fields(j, {"kind"}, path);
        return TbdSource{};
    }
    if (kind == "literal") {
        reject_unknown_fields(j, {"kind", "amount", "unit"}, path);
        std::string up = key_path(path, "unit");
        Unit unit = at_path(up, [&] { return unit_from_string(string_from_json(require_field(j, "unit", path), up)); });
        if (unit == Unit::TBD) bad(up, "a literal cannot have unit TBD; use kind 'tbd'");
        return LiteralSource{Quantity(decimal_from_json(require_field(j, "amount", path), key_path(path, "amount")), unit)};
    }
    if (kind == "derived") {
        reject_unknown_fields(j, {"kind", "formula", "args", "factors", "unit"}, path);
        DerivedSource d;
        d.formula = string_from_json(require_field(j, "formula", path), key_path(path, "formula"));
        if (const Json* args = optional_field(j, "args")) d.args = parameters_from_json(*args, key_path(path, "args"));
        if (const Json* factors = optional_field(j, "factors")) {
            std::string fp = key_path(path, "factors");
            require_array(*factors, fp);
            for (std::size_t i = 0; i < factors->size(); ++i) {
                d.factors.push_back(string_from_json((*factors)[i], index_path(fp, i)));
            }
        }
        if (const Json* unit = optional_field(j, "unit")) {
            std::string up = key_path(path, "unit");
            d.unit = at_path(up, [&] { return unit_from_string(string_from_json(*unit, up)); });
        }
        return d;
    }
    bad(key_path(path, "kind"), "kind must be 'literal', 'derived' or 'tbd'");
}

LineItem item_from_json(const Json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_fields(j, {"id", "label", "side", "provenance", "horizon_years", "source"}, path);
    LineItem item;
    item.id = string_from_json(require_field(j, "id", path), key_path(path, "id"));
    if (const Json* label = optional_field(j, "label")) item.label = string_from_json(*label, key_path(path, "label"));
    std::string sp = key_path(path, "side");
    item.side = at_path(sp, [&] { return side_from_string(string_from_json(require_field(j, "side", path), sp)); });
    std::string pp = key_path(path, "provenance");
    item.provenance = at_path(
        pp, [&] { return provenance_from_string(string_from_json(require_field(j, "provenance", path), pp)); });
    if (const Json* h = optional_field(j, "horizon_years")) {
        std::string hp = key_path(path, "horizon_years");
        if (!h->is_number_integer()) bad(hp, "expected an integer");
        auto v = h->get<std::int64_t>();
        if (v < 1 || v > 1000) bad(hp, "horizon_years must be in [1, 1000]");
        item.horizon_years = static_cast<int>(v);
    }
    item.source = source_from_json(require_field(j, "source", path), key_path(path, "source"));
    return item;
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        int line = 1 + static_cast<int>(std::count(text.begin(), text.begin() + upto, '\n'));
        throw CalcError(ErrorKind::ParseError, "malformed JSON").with_line(line).with_path("$");
    }
}

const Json& require_field(const Json& obj, std::string_view key, const std::string& path) {
    require_object(obj, path);
    const Json* f = optional_field(obj, key);
    if (!f) bad(key_path(path, key), "required field is missing");
    return *f;
}

void reject_unknown_fields(const Json& obj, std::initializer_list<std::string_view> allowed,
                           const std::string& path) {
    require_object(obj, path);
    for (const auto& [k, _] : obj.items()) {
        if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
            bad(key_path(path, k), "unknown field");
        }
    }
}

Decimal decimal_from_json(const Json& value, const std::string& path) {
    if (!value.is_string()) bad(path, "expected a decimal string such as \"0.001\"");
    auto d = Decimal::try_parse(value.get_ref<const std::string&>());
    if (!d) bad(path, "not a decimal number: '" + value.get<std::string>() + "'");
    return *d;
}

std::string string_from_json(const Json& value, const std::string& path) {
    if (!value.is_string()) bad(path, "expected a string");
    return value.get<std::string>();
}

std::uint64_t count_from_json(const Json& value, const std::string& path) {
    if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        bad(path, "expected a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

std::string amount_text(const Decimal& amount, Unit unit) {
    return amount.to_string(unit == Unit::USD ? kCentScale : 0);
}

Json scenario_to_json(const Scenario& scenario) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = scenario.name;
    j["currency"] = scenario.currency;
    Json params = Json::object();
    for (const auto& [k, v] : scenario.parameters) params[k] = v.to_string();
    j["parameters"] = std::move(params);
    Json items = Json::array();
    for (const auto& item : scenario.line_items) {
        Json ji;
        ji["id"] = item.id;
        ji["label"] = item.label;
        ji["side"] = std::string(to_string(item.side));
        ji["provenance"] = std::string(to_string(item.provenance));
        ji["horizon_years"] = item.horizon_years;
        ji["source"] = source_to_json(item.source);
        items.push_back(std::move(ji));
    }
    j["line_items"] = std::move(items);
    return j;
}

Scenario scenario_from_json(const Json& doc, const std::string& path) {
    require_object(doc, path);
    const Json& version = require_field(doc, "schema_version", path);
    if (!version.is_number_integer()) bad(key_path(path, "schema_version"), "expected an integer");
    if (version.get<std::int64_t>() != kSchemaVersion) {
        throw CalcError(ErrorKind::UnsupportedVersion,
                        "schema_version " + version.dump() + " is not supported (expected " +
                            std::to_string(kSchemaVersion) + ")")
            .with_path(key_path(path, "schema_version"));
    }
    reject_unknown_fields(doc, {"schema_version", "name", "currency", "parameters", "line_items"}, path);

    Scenario s;
    s.name = string_from_json(require_field(doc, "name", path), key_path(path, "name"));
    if (const Json* c = optional_field(doc, "currency")) {
        s.currency = string_from_json(*c, key_path(path, "currency"));
        if (s.currency != "USD") bad(key_path(path, "currency"), "only USD is supported");
    }
    if (const Json* p = optional_field(doc, "parameters")) {
        s.parameters = parameters_from_json(*p, key_path(path, "parameters"));
    }
    const std::string ip = key_path(path, "line_items");
    const Json& items = require_array(require_field(doc, "line_items", path), ip);
    for (std::size_t i = 0; i < items.size(); ++i) {
        s.line_items.push_back(item_from_json(items[i], index_path(ip, i)));
    }

    try {
        validate_scenario(s);
    } catch (const CalcError& e) {
        std::string where = ip;
        if (e.item_id()) {
            for (std::size_t i = 0; i < s.line_items.size(); ++i) {
                if (s.line_items[i].id == *e.item_id()) where = index_path(ip, i);
            }
        }
        throw e.with_path(where);
    }
    return s;
}

std::string save_scenario(const Scenario& scenario) { return scenario_to_json(scenario).dump(2) + "\n"; }

Scenario load_scenario(std::string_view text) { return scenario_from_json(parse_json(text)); }

Scenario load_scenario_file(const std::filesystem::path& file) { return load_scenario(read_file(file)); }

void save_scenario_file(const std::filesystem::path& file, const Scenario& scenario) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw CalcError(ErrorKind::NotFound, "cannot write " + file.string());
    out << save_scenario(scenario);
}

Json report_to_json(const LedgerReport& report) {
    Json units = Json::object();
    for (const auto& [unit, t] : report.totals) {
        units[std::string(to_string(unit))] = {
            {"subtotal_debits", amount_text(t.subtotal_debits, unit)},
            {"subtotal_credits", amount_text(t.subtotal_credits, unit)},
            {"net", amount_text(t.net, unit)},
        };
    }
    Json items = Json::array();
    for (const auto& it : report.items) {
        Json ji;
        ji["id"] = it.id;
        ji["label"] = it.label;
        ji["side"] = std::string(to_string(it.side));
        ji["provenance"] = std::string(to_string(it.provenance));
        ji["unit"] = std::string(to_string(it.value.unit()));
        ji["amount"] = it.value.is_tbd() ? std::string("TBD") : amount_text(it.value.amount(), it.value.unit());
        if (it.per_year) ji["per_year"] = amount_text(it.per_year->amount(), it.per_year->unit());
        items.push_back(std::move(ji));
    }
    Json j;
    j["units"] = std::move(units);
    j["tbd_items"] = report.tbd_items;
    j["items"] = std::move(items);
    return j;
}

Json sweep_to_json(const SweepResult& result) {
    Json points = Json::array();
    for (const auto& p : result.points) {
        points.push_back({{"value", p.param_value.to_string()}, {"usd_net", amount_text(p.usd_net, Unit::USD)}});
    }
    return {{"param", result.param_path}, {"points", std::move(points)}};
}

Json break_even_to_json(const std::string& path, const BreakEvenResult& r) {
    return {{"param", path},
            {"value", r.value.to_string()},
            {"usd_net", amount_text(r.usd_net, Unit::USD)},
            {"evaluations", r.evaluations},
            {"bisection_steps", r.bisection_steps}};
}

Json tornado_to_json(const std::vector<TornadoBar>& bars) {
    Json out = Json::array();
    for (const auto& b : bars) {
        out.push_back({{"param", b.param_path},
                       {"net_low", amount_text(b.net_low, Unit::USD)},
                       {"net_high", amount_text(b.net_high, Unit::USD)},
                       {"span", amount_text(b.span, Unit::USD)}});
    }
    return {{"bars", std::move(out)}};
}

// --------------------------------------------------------------------------
// Defaults

Json defaults_to_json(const Defaults& defaults) {
    Json tmit = Json::array();
    for (const auto& d : defaults.tmit) {
        tmit.push_back({{"bed_size", std::string(hai::to_string(d.bed_size))},
                        {"region", d.region},
                        {"teaching", d.teaching},
                        {"infection_type", std::string(hai::to_string(d.type))},
                        {"excess_cost_per_infection", d.excess_cost_per_infection.to_string(2)},
                        {"excess_los_days_per_infection", d.excess_los_days_per_infection.to_string()}});
    }
    Json ed = Json::array();
    for (const auto& d : defaults.edweek) {
        ed.push_back({{"state", d.state},
                      {"enrolled_students", d.enrolled_students},
                      {"annual_revenue", d.annual_revenue.to_string(2)}});
    }
    return {{"schema_version", kSchemaVersion}, {"tmit", std::move(tmit)}, {"edweek", std::move(ed)}};
}

Defaults defaults_from_json(const Json& doc) {
    const std::string root = "$";
    const Json& version = require_field(doc, "schema_version", root);
    if (!version.is_number_integer() || version.get<std::int64_t>() != kSchemaVersion) {
        throw CalcError(ErrorKind::UnsupportedVersion, "unsupported defaults schema_version")
            .with_path("$.schema_version");
    }
    reject_unknown_fields(doc, {"schema_version", "tmit", "edweek"}, root);
    Defaults out;
    if (const Json* tmit = optional_field(doc, "tmit")) {
        require_array(*tmit, "$.tmit");
        for (std::size_t i = 0; i < tmit->size(); ++i) {
            const Json& e = (*tmit)[i];
            std::string p = index_path("$.tmit", i);
            reject_unknown_fields(e, {"bed_size", "region", "teaching", "infection_type", "excess_cost_per_infection",
                                      "excess_los_days_per_infection"},
                                  p);
            hai::TmitDefault d;
            d.bed_size = at_path(key_path(p, "bed_size"), [&] {
                return hai::bed_size_from_string(string_from_json(require_field(e, "bed_size", p), key_path(p, "bed_size")));
            });
            d.region = string_from_json(require_field(e, "region", p), key_path(p, "region"));
            d.teaching = bool_from_json(require_field(e, "teaching", p), key_path(p, "teaching"));
            d.type = at_path(key_path(p, "infection_type"), [&] {
                return hai::infection_type_from_string(string_from_json(require_field(e, "infection_type", p), key_path(p, "infection_type")));
            });
            d.excess_cost_per_infection = decimal_from_json(require_field(e, "excess_cost_per_infection", p),
                                                            key_path(p, "excess_cost_per_infection"));
            d.excess_los_days_per_infection = decimal_from_json(
                require_field(e, "excess_los_days_per_infection", p), key_path(p, "excess_los_days_per_infection"));
            out.tmit.push_back(std::move(d));
        }
    }
    if (const Json* ed = optional_field(doc, "edweek")) {
        require_array(*ed, "$.edweek");
        for (std::size_t i = 0; i < ed->size(); ++i) {
            const Json& e = (*ed)[i];
            std::string p = index_path("$.edweek", i);
            reject_unknown_fields(e, {"state", "enrolled_students", "annual_revenue"}, p);
            out.edweek.push_back({string_from_json(require_field(e, "state", p), key_path(p, "state")),
                                  count_from_json(require_field(e, "enrolled_students", p),
                                                  key_path(p, "enrolled_students")),
                                  decimal_from_json(require_field(e, "annual_revenue", p),
                                                    key_path(p, "annual_revenue"))});
        }
    }
    return out;
}

Defaults load_defaults(std::string_view text) { return defaults_from_json(parse_json(text)); }

Defaults load_defaults_file(const std::filesystem::path& file) { return load_defaults(read_file(file)); }

TmitRequest tmit_request_from_json(const Json& doc, const Defaults& defaults) {
    const std::string root = "$";
    reject_unknown_fields(doc, {"profile", "entries"}, root);
    const Json& pj = require_field(doc, "profile", root);
    const std::string pp = "$.profile";
    reject_unknown_fields(pj,
                          {"bed_size", "region", "teaching", "annual_medical_admissions", "annual_surgical_admissions",
                           "ventilator_patients", "urinary_catheter_patients", "central_line_patients"},
                          pp);
    TmitRequest req;
    auto& prof = req.profile;
    prof.bed_size = at_path(key_path(pp, "bed_size"), [&] {
        return hai::bed_size_from_string(string_from_json(require_field(pj, "bed_size", pp), key_path(pp, "bed_size")));
    });
    prof.region = string_from_json(require_field(pj, "region", pp), key_path(pp, "region"));
    prof.teaching = bool_from_json(require_field(pj, "teaching", pp), key_path(pp, "teaching"));
    auto count = [&](const char* key, std::uint64_t& slot) {
        if (const Json* v = optional_field(pj, key)) slot = count_from_json(*v, key_path(pp, key));
    };
    count("annual_medical_admissions", prof.annual_medical_admissions);
    count("annual_surgical_admissions", prof.annual_surgical_admissions);
    count("ventilator_patients", prof.ventilator_patients);
    count("urinary_catheter_patients", prof.urinary_catheter_patients);
    count("central_line_patients", prof.central_line_patients);

    if (const Json* entries = optional_field(doc, "entries")) {
        require_array(*entries, "$.entries");
        for (std::size_t i = 0; i < entries->size(); ++i) {
            const Json& e = (*entries)[i];
            std::string p = index_path("$.entries", i);
            reject_unknown_fields(
                e, {"infection_type", "infections_per_year", "excess_cost_per_infection", "excess_los_days_per_infection"},
                p);
            hai::InfectionEntry entry;
            entry.type = at_path(key_path(p, "infection_type"), [&] {
                return hai::infection_type_from_string(string_from_json(require_field(e, "infection_type", p), key_path(p, "infection_type")));
            });
            entry.infections_per_year =
                count_from_json(require_field(e, "infections_per_year", p), key_path(p, "infections_per_year"));
            const hai::TmitDefault* d = hai::find_default(defaults.tmit, prof, entry.type);
            if (const Json* c = optional_field(e, "excess_cost_per_infection")) {
                entry.excess_cost_per_infection = decimal_from_json(*c, key_path(p, "excess_cost_per_infection"));
            } else if (d) {
                entry.excess_cost_per_infection = d->excess_cost_per_infection;
            }
            if (const Json* l = optional_field(e, "excess_los_days_per_infection")) {
                entry.excess_los_days_per_infection = decimal_from_json(*l, key_path(p, "excess_los_days_per_infection"));
            } else if (d) {
                entry.excess_los_days_per_infection = d->excess_los_days_per_infection;
            }
            req.entries.push_back(std::move(entry));
        }
    }
    return req;
}

Json tmit_report_to_json(const hai::TmitReport& report) {
    Json lines = Json::array();
    for (const auto& l : report.lines) {
        lines.push_back({{"infection_type", std::string(hai::to_string(l.type))},
                         {"infections_per_year", l.infections_per_year},
                         {"annual_cost", amount_text(l.annual_cost, Unit::USD)},
                         {"excess_los_days", l.excess_los_days.to_string()}});
    }
    const auto& p = report.profile;
    return {{"profile",
             {{"bed_size", std::string(hai::to_string(p.bed_size))},
              {"region", p.region},
              {"teaching", p.teaching},
              {"annual_medical_admissions", p.annual_medical_admissions},
              {"annual_surgical_admissions", p.annual_surgical_admissions},
              {"ventilator_patients", p.ventilator_patients},
              {"urinary_catheter_patients", p.urinary_catheter_patients},
              {"central_line_patients", p.central_line_patients}}},
            {"lines", std::move(lines)},
            {"total_infections", report.total_infections},
            {"total_cost", amount_text(report.total_cost, Unit::USD)},
            {"total_los_days", report.total_los_days.to_string()}};
}

edweek::EdweekInput edweek_input_from_json(const Json& doc, const Defaults& defaults) {
    const std::string root = "$";
    reject_unknown_fields(doc,
                          {"state", "enrolled_students", "annual_revenue", "pct_without_internet", "extra_meal_days",
                           "meals_per_day_cost", "extra_school_days", "cost_per_school_day", "pct_students_impacted",
                           "revenue_cut_y1", "revenue_cut_y2", "per_student_internet_cost"},
                          root);
    edweek::EdweekInput in;
    in.state = string_from_json(require_field(doc, "state", root), "$.state");
    const edweek::StateDefault* d = edweek::find_default(defaults.edweek, in.state);
    auto dec = [&](const char* key, Decimal& slot, const Decimal* fallback) {
        if (const Json* v = optional_field(doc, key)) {
            slot = decimal_from_json(*v, key_path(root, key));
        } else if (fallback) {
            slot = *fallback;
        } else {
            bad(key_path(root, key), "required field is missing");
        }
    };
    auto cnt = [&](const char* key, std::uint64_t& slot, const std::uint64_t* fallback) {
        if (const Json* v = optional_field(doc, key)) {
            slot = count_from_json(*v, key_path(root, key));
        } else if (fallback) {
            slot = *fallback;
        } else {
            bad(key_path(root, key), "required field is missing");
        }
    };
    const std::uint64_t zero_count = 0;
    const Decimal zero;
    cnt("enrolled_students", in.enrolled_students, d ? &d->enrolled_students : nullptr);
    dec("annual_revenue", in.annual_revenue, d ? &d->annual_revenue : nullptr);
    dec("pct_without_internet", in.pct_without_internet, &zero);
    cnt("extra_meal_days", in.extra_meal_days, &zero_count);
    dec("meals_per_day_cost", in.meals_per_day_cost, &zero);
    cnt("extra_school_days", in.extra_school_days, &zero_count);
    dec("cost_per_school_day", in.cost_per_school_day, &zero);
    dec("pct_students_impacted", in.pct_students_impacted, &zero);
    dec("revenue_cut_y1", in.revenue_cut_y1, &zero);
    dec("revenue_cut_y2", in.revenue_cut_y2, &zero);
    dec("per_student_internet_cost", in.per_student_internet_cost, &zero);
    return in;
}

Json edweek_breakdown_to_json(const edweek::EdweekBreakdown& b) {
    auto usd = [](const Decimal& d) { return amount_text(d, Unit::USD); };
    return {{"internet", usd(b.internet)},
            {"meals", usd(b.meals)},
            {"extended_year", usd(b.extended_year)},
            {"revenue_loss_y1", usd(b.revenue_loss_y1)},
            {"revenue_loss_y2", usd(b.revenue_loss_y2)},
            {"total_increased_cost", usd(b.total_increased_cost)},
            {"total_revenue_loss", usd(b.total_revenue_loss)}};
}

const std::string& scenario_schema() {
    static const std::string schema = R"({
  "$schema": "https://json-schema.org/draft/2020-12/schema",
  "title": "Scenario document",
  "type": "object",
  "additionalProperties": false,
  "required": ["schema_version", "name", "line_items"],
  "$defs": {
    "decimal": {"type": "string", "pattern": "^[+-]?[0-9]+(\\.[0-9]+)?$"},
    "identifier": {"type": "string", "pattern": "^[A-Za-z0-9_-]{1,64}$"},
    "unit": {"enum": ["USD", "Lives", "Jobs", "BasisPoints", "Dimensionless"]},
    "source": {
      "oneOf": [
        {
          "type": "object",
          "additionalProperties": false,
          "required": ["kind", "amount", "unit"],
          "properties": {
            "kind": {"const": "literal"},
            "amount": {"$ref": "#/$defs/decimal"},
            "unit": {"$ref": "#/$defs/unit"}
          }
        },
        {
          "type": "object",
          "additionalProperties": false,
          "required": ["kind", "formula"],
          "properties": {
            "kind": {"const": "derived"},
            "formula": {"enum": ["healthcare_savings", "gdp_gain", "lives_saved", "jobs_saved",
                                 "inflation_reduction", "product"]},
            "args": {"type": "object", "additionalProperties": {"$ref": "#/$defs/decimal"}},
            "factors": {"type": "array", "items": {"$ref": "#/$defs/identifier"}},
            "unit": {"$ref": "#/$defs/unit"}
          }
        },
        {
          "type": "object",
          "additionalProperties": false,
          "required": ["kind"],
          "properties": {"kind": {"const": "tbd"}}
        }
      ]
    }
  },
  "properties": {
    "schema_version": {"const": 1},
    "name": {"type": "string"},
    "currency": {"const": "USD"},
    "parameters": {"type": "object", "additionalProperties": {"$ref": "#/$defs/decimal"}},
    "line_items": {
      "type": "array",
      "items": {
        "type": "object",
        "additionalProperties": false,
        "required": ["id", "side", "provenance", "source"],
        "properties": {
          "id": {"$ref": "#/$defs/identifier"},
          "label": {"type": "string"},
          "side": {"enum": ["debit", "credit"]},
          "provenance": {"enum": ["user", "paper-sample", "default"]},
          "horizon_years": {"type": "integer", "minimum": 1, "maximum": 1000},
          "source": {"$ref": "#/$defs/source"}
        }
      }
    }
  }
}
)";
    return schema;
}

}  // namespace impactcalc::io
