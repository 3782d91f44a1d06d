#pragma once

#include "impactcalc/decimal.hpp"
#include "impactcalc/quantity.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace impactcalc {

// Table-row formulas. Each returns the exact product of its arguments and
// throws CalcError(OutOfRange) when a precondition fails.

/// monthly_loss x months x reduction_fraction x conversion.
/// months >= 1; reduction_fraction and conversion in [0, 1].
Decimal healthcare_savings(const Decimal& monthly_loss, const Decimal& months,
                           const Decimal& reduction_fraction, const Decimal& conversion);

/// gdp x covid_attribution x fraction; all >= 0, the two fractions <= 1.
Decimal gdp_gain(const Decimal& gdp, const Decimal& covid_attribution, const Decimal& fraction);

struct PerYearTotal {
    Decimal per_year;
    Decimal total;
    friend bool operator==(const PerYearTotal&, const PerYearTotal&) = default;
};

/// per_year = total_deaths x reduction_fraction, total = per_year x horizon_years.
PerYearTotal lives_saved(const Decimal& total_deaths, const Decimal& reduction_fraction,
                         const Decimal& horizon_years);
/// Same shape as lives_saved, over jobs lost.
PerYearTotal jobs_saved(const Decimal& jobs_lost, const Decimal& fraction,
                        const Decimal& horizon_years);

/// bps x fraction, in basis points.
Decimal inflation_reduction(const Decimal& bps, const Decimal& fraction);

/// Plain product of user factors, the escape hatch for custom rows.
Decimal product(std::span<const Decimal> factors);

// ---------------------------------------------------------------------------
// Registry

struct ArgSpec {
    std::string name;
    Unit unit;
};

struct FormulaSpec {
    std::string name;
    std::vector<ArgSpec> required_args;
    /// nullopt: the line item declares the output unit (generic product).
    std::optional<Unit> output_unit;
    /// Takes an open-ended factor list instead of named arguments.
    bool variadic = false;
    std::string description;
};

struct FormulaInput {
    std::map<std::string, Decimal, std::less<>> args;
    std::vector<Decimal> factors;
    std::optional<Unit> declared_unit;

    const Decimal& arg(std::string_view name) const;
};

struct FormulaResult {
    Quantity value = Quantity::tbd();
    /// Set by formulas that spread a total over a horizon.
    std::optional<Quantity> per_year;
};

using FormulaFn = std::function<FormulaResult(const FormulaInput&)>;

struct Formula {
    FormulaSpec spec;
    FormulaFn fn;
};

/// Immutable after construction. Construction rejects duplicate names and
/// probes every formula to confirm it produces its declared unit.
class FormulaRegistry {
public:
    explicit FormulaRegistry(std::vector<Formula> formulas);

    /// The built-in formulas behind the shipped scenarios.
    static const FormulaRegistry& standard();

    const Formula* find(std::string_view name) const;
    const std::vector<Formula>& formulas() const noexcept { return formulas_; }

private:
    std::vector<Formula> formulas_;
};

}  // namespace impactcalc
