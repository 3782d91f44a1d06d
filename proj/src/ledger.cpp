#include "impactcalc/ledger.hpp"

#include "impactcalc/error.hpp"

#include <set>

namespace impactcalc {

std::string_view to_string(Side side) { return side == Side::Debit ? "debit" : "credit"; }

std::string_view to_string(Provenance provenance) {
    switch (provenance) {
        case Provenance::User: return "user";
        case Provenance::PaperSample: return "paper-sample";
        case Provenance::Default: return "default";
    }
    return "?";
}

Side side_from_string(std::string_view name) {
    if (name == "debit") return Side::Debit;
    if (name == "credit") return Side::Credit;
    throw CalcError(ErrorKind::ParseError, "side must be 'debit' or 'credit', got '" + std::string(name) + "'");
}

Provenance provenance_from_string(std::string_view name) {
    for (Provenance p : {Provenance::User, Provenance::PaperSample, Provenance::Default}) {
        if (to_string(p) == name) return p;
    }
    throw CalcError(ErrorKind::ParseError, "unknown provenance '" + std::string(name) + "'");
}

bool is_valid_identifier(std::string_view name) {
    if (name.empty() || name.size() > 64) return false;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

const LineItem* Scenario::find(std::string_view id) const {
    for (const auto& item : line_items) {
        if (item.id == id) return &item;
    }
    return nullptr;
}

Decimal LedgerReport::net(Unit unit) const {
    auto it = totals.find(unit);
    return it == totals.end() ? Decimal() : it->second.net;
}

namespace {

std::optional<Decimal> resolve(std::string_view name, const LineItem& item,
                               const DerivedSource& src, const ParameterMap& params) {
    if (auto it = src.args.find(name); it != src.args.end()) return it->second;
    if (auto it = params.find(name); it != params.end()) return it->second;
    if (name == "horizon_years") return Decimal(item.horizon_years);
    return std::nullopt;
}

const Formula& lookup(const DerivedSource& src, const FormulaRegistry& registry) {
    const Formula* f = registry.find(src.formula);
    if (!f) throw CalcError(ErrorKind::UnknownFormula, "no formula named '" + src.formula + "'");
    return *f;
}

FormulaInput bind_arguments(const LineItem& item, const DerivedSource& src, const Formula& formula,
                            const ParameterMap& params) {
    FormulaInput input;
    input.declared_unit = src.unit;
    for (const auto& arg : formula.spec.required_args) {
        auto value = resolve(arg.name, item, src, params);
        if (!value) {
            throw CalcError(ErrorKind::MissingArgument,
                            "formula '" + formula.spec.name + "' needs '" + arg.name + "'");
        }
        input.args.emplace(arg.name, std::move(*value));
    }
    if (formula.spec.variadic) {
        if (src.factors.empty()) {
            for (const auto& [_, v] : src.args) input.factors.push_back(v);
        } else {
            for (const auto& name : src.factors) {
                auto value = resolve(name, item, src, params);
                if (!value) {
                    throw CalcError(ErrorKind::MissingArgument, "factor '" + name + "' is not defined");
                }
                input.factors.push_back(std::move(*value));
            }
        }
        if (input.factors.empty()) {
            throw CalcError(ErrorKind::MissingArgument, "formula '" + formula.spec.name + "' has no factors");
        }
    }
    return input;
}

Quantity to_ledger_precision(const Quantity& q) {
    if (q.unit() != Unit::USD) return q;
    return Quantity::usd(q.amount().rounded(kCentScale, Rounding::HalfEven));
}

}  // namespace

FormulaResult evaluate_line_item_detailed(const LineItem& item, const ParameterMap& scenario_params,
                                          const FormulaRegistry& registry) {
    return std::visit(
        [&](const auto& src) -> FormulaResult {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, LiteralSource>) {
                return {src.value, std::nullopt};
            } else if constexpr (std::is_same_v<T, TbdSource>) {
                return {Quantity::tbd(), std::nullopt};
            } else {
                const Formula& formula = lookup(src, registry);
                if (src.unit && formula.spec.output_unit && *src.unit != *formula.spec.output_unit) {
                    throw CalcError(ErrorKind::UnitMismatch,
                                    "formula '" + formula.spec.name + "' yields " +
                                        std::string(to_string(*formula.spec.output_unit)) +
                                        " but the item declares " + std::string(to_string(*src.unit)));
                }
                FormulaResult r = formula.fn(bind_arguments(item, src, formula, scenario_params));
                r.value = to_ledger_precision(r.value);
                if (r.per_year) r.per_year = to_ledger_precision(*r.per_year);
                return r;
            }
        },
        item.source);
}

Quantity evaluate_line_item(const LineItem& item, const ParameterMap& scenario_params,
                            const FormulaRegistry& registry) {
    return evaluate_line_item_detailed(item, scenario_params, registry).value;
}

LedgerReport compute_ledger(const Scenario& scenario, const FormulaRegistry& registry) {
    LedgerReport report;
    report.items.reserve(scenario.line_items.size());
    for (const auto& item : scenario.line_items) {
        FormulaResult r;
        try {
            r = evaluate_line_item_detailed(item, scenario.parameters, registry);
        } catch (const CalcError& e) {
            throw e.with_item(item.id);
        }
        if (r.value.is_tbd()) {
            report.tbd_items.push_back(item.id);
        } else {
            UnitTotals& t = report.totals[r.value.unit()];
            (item.side == Side::Debit ? t.subtotal_debits : t.subtotal_credits) += r.value.amount();
        }
        report.items.push_back({item.id, item.label, item.side, item.provenance, r.value, r.per_year});
    }
    for (auto& [_, t] : report.totals) t.net = t.subtotal_credits - t.subtotal_debits;
    return report;
}

void validate_line_item(const LineItem& item, const FormulaRegistry& registry) {
    auto fail = [&](const std::string& why) {
        throw CalcError(ErrorKind::InvalidItem, why).with_item(item.id);
    };
    if (!is_valid_identifier(item.id)) fail("id must be 1-64 characters of [A-Za-z0-9_-]");
    if (item.horizon_years < 1) fail("horizon_years must be >= 1");

    if (const auto* lit = std::get_if<LiteralSource>(&item.source)) {
        if (lit->value.is_tbd()) fail("a literal source needs an amount; use a tbd source instead");
        if (lit->value.unit() == Unit::USD && lit->value.amount().scale() > kCentScale) {
            fail("USD amounts carry at most two fractional digits");
        }
    } else if (const auto* der = std::get_if<DerivedSource>(&item.source)) {
        const Formula* f = registry.find(der->formula);
        if (!f) {
            throw CalcError(ErrorKind::UnknownFormula, "no formula named '" + der->formula + "'")
                .with_item(item.id);
        }
        if (der->unit == Unit::TBD) fail("declared unit cannot be TBD");
        if (der->unit && f->spec.output_unit && *der->unit != *f->spec.output_unit) {
            throw CalcError(ErrorKind::UnitMismatch, "declared unit conflicts with formula '" +
                                                         der->formula + "'")
                .with_item(item.id);
        }
        if (!f->spec.output_unit && !der->unit) fail("formula '" + der->formula + "' needs a declared unit");
        for (const auto& [name, _] : der->args) {
            if (!is_valid_identifier(name)) fail("invalid argument name '" + name + "'");
            bool known = f->spec.variadic;
            for (const auto& a : f->spec.required_args) known = known || a.name == name;
            if (!known) fail("formula '" + der->formula + "' takes no argument '" + name + "'");
        }
        if (!f->spec.variadic && !der->factors.empty()) {
            fail("formula '" + der->formula + "' does not take a factor list");
        }
    }
}

void validate_scenario(const Scenario& scenario, const FormulaRegistry& registry) {
    if (scenario.currency != "USD") {
        throw CalcError(ErrorKind::ValidationError, "currency must be USD");
    }
    for (const auto& [name, _] : scenario.parameters) {
        if (!is_valid_identifier(name)) {
            throw CalcError(ErrorKind::ValidationError, "invalid parameter name '" + name + "'");
        }
    }
    std::set<std::string, std::less<>> ids;
    for (const auto& item : scenario.line_items) {
        try {
            validate_line_item(item, registry);
        } catch (const CalcError& e) {
            throw CalcError(ErrorKind::ValidationError, e.detail()).with_item(item.id);
        }
        if (!ids.insert(item.id).second) {
            throw CalcError(ErrorKind::ValidationError, "duplicate line item id").with_item(item.id);
        }
        if (const auto* der = std::get_if<DerivedSource>(&item.source)) {
            const Formula& f = *registry.find(der->formula);
            try {
                (void)bind_arguments(item, *der, f, scenario.parameters);
            } catch (const CalcError& e) {
                throw CalcError(ErrorKind::ValidationError, e.detail()).with_item(item.id);
            }
        }
    }
}

Scenario upsert_line_item(const Scenario& scenario, LineItem item, const FormulaRegistry& registry) {
    validate_line_item(item, registry);
    Scenario out = scenario;
    for (auto& existing : out.line_items) {
        if (existing.id == item.id) {
            existing = std::move(item);
            return out;
        }
    }
    out.line_items.push_back(std::move(item));
    return out;
}

}  // namespace impactcalc
