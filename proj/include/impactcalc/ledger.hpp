#pragma once

#include "impactcalc/decimal.hpp"
#include "impactcalc/derivations.hpp"
#include "impactcalc/quantity.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace impactcalc {

enum class Side { Debit, Credit };
enum class Provenance { User, PaperSample, Default };

std::string_view to_string(Side side);
std::string_view to_string(Provenance provenance);
Side side_from_string(std::string_view name);
Provenance provenance_from_string(std::string_view name);

using ParameterMap = std::map<std::string, Decimal, std::less<>>;

struct LiteralSource {
    Quantity value;
    friend bool operator==(const LiteralSource&, const LiteralSource&) = default;
};

struct DerivedSource {
    std::string formula;
    /// Item-local arguments; these shadow scenario parameters of the same name.
    ParameterMap args;
    /// Names of the values multiplied by a variadic formula. Empty means
    /// "every item-local argument, in name order".
    std::vector<std::string> factors;
    /// Output unit asserted by the author. Required for `product`.
    std::optional<Unit> unit;
    friend bool operator==(const DerivedSource&, const DerivedSource&) = default;
};

struct TbdSource {
    friend bool operator==(const TbdSource&, const TbdSource&) = default;
};

using ValueSource = std::variant<LiteralSource, DerivedSource, TbdSource>;

struct LineItem {
    std::string id;
    std::string label;
    Side side = Side::Credit;
    ValueSource source = TbdSource{};
    Provenance provenance = Provenance::User;
    int horizon_years = 1;

    friend bool operator==(const LineItem&, const LineItem&) = default;
};

struct Scenario {
    std::string name;
    std::string currency = "USD";
    ParameterMap parameters;
    std::vector<LineItem> line_items;

    const LineItem* find(std::string_view id) const;
    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct UnitTotals {
    Decimal subtotal_debits;
    Decimal subtotal_credits;
    Decimal net;
    friend bool operator==(const UnitTotals&, const UnitTotals&) = default;
};

struct ItemTrace {
    std::string id;
    std::string label;
    Side side = Side::Credit;
    Provenance provenance = Provenance::User;
    Quantity value = Quantity::tbd();
    std::optional<Quantity> per_year;
    friend bool operator==(const ItemTrace&, const ItemTrace&) = default;
};

struct LedgerReport {
    /// One entry per unit that has at least one evaluated item.
    std::map<Unit, UnitTotals> totals;
    std::vector<std::string> tbd_items;
    /// In scenario order, TBD rows included.
    std::vector<ItemTrace> items;

    /// Zero when the unit does not appear.
    Decimal net(Unit unit) const;
    friend bool operator==(const LedgerReport&, const LedgerReport&) = default;
};

/// Evaluation with the optional per-year breakdown kept for the trace.
FormulaResult evaluate_line_item_detailed(const LineItem& item, const ParameterMap& scenario_params,
                                          const FormulaRegistry& registry = FormulaRegistry::standard());

/// Literal: stored value. Tbd: the TBD marker. Derived: the registered
/// formula over item args, then scenario params. USD results are held to
/// whole cents (half-even).
Quantity evaluate_line_item(const LineItem& item, const ParameterMap& scenario_params,
                            const FormulaRegistry& registry = FormulaRegistry::standard());

/// Errors from individual items are rethrown with the item id attached.
LedgerReport compute_ledger(const Scenario& scenario,
                            const FormulaRegistry& registry = FormulaRegistry::standard());

/// Throws CalcError(InvalidItem) describing the first broken item invariant.
void validate_line_item(const LineItem& item,
                        const FormulaRegistry& registry = FormulaRegistry::standard());

/// Item invariants plus scenario ones (unique ids, resolvable arguments).
/// Throws CalcError(ValidationError) with the item id attached.
void validate_scenario(const Scenario& scenario,
                       const FormulaRegistry& registry = FormulaRegistry::standard());

/// Replaces the item with the same id, or appends. The input is untouched.
Scenario upsert_line_item(const Scenario& scenario, LineItem item,
                          const FormulaRegistry& registry = FormulaRegistry::standard());

/// Identifier charset for item ids, parameter and argument names.
bool is_valid_identifier(std::string_view name);

}  // namespace impactcalc
