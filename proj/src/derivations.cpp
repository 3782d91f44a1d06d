#include "impactcalc/derivations.hpp"

#include "impactcalc/error.hpp"

#include <set>

namespace impactcalc {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw CalcError(ErrorKind::OutOfRange, what);
}

bool is_fraction(const Decimal& d) { return d.sign() >= 0 && d <= Decimal(1); }

PerYearTotal spread_over_horizon(const Decimal& base, const Decimal& fraction,
                                 const Decimal& horizon_years) {
    require(base.sign() >= 0, "base count must be >= 0");
    require(is_fraction(fraction), "fraction must be in [0, 1]");
    require(horizon_years.is_integer() && horizon_years >= Decimal(1),
            "horizon_years must be an integer >= 1");
    Decimal per_year = base * fraction;
    return {per_year, per_year * horizon_years};
}

}  // namespace

Decimal healthcare_savings(const Decimal& monthly_loss, const Decimal& months,
                           const Decimal& reduction_fraction, const Decimal& conversion) {
    require(months >= Decimal(1), "months must be >= 1");
    require(is_fraction(reduction_fraction), "reduction_fraction must be in [0, 1]");
    require(is_fraction(conversion), "conversion must be in [0, 1]");
    return monthly_loss * months * reduction_fraction * conversion;
}

Decimal gdp_gain(const Decimal& gdp, const Decimal& covid_attribution, const Decimal& fraction) {
    require(gdp.sign() >= 0, "gdp must be >= 0");
    require(is_fraction(covid_attribution), "covid_attribution must be in [0, 1]");
    require(is_fraction(fraction), "fraction must be in [0, 1]");
    return gdp * covid_attribution * fraction;
}

PerYearTotal lives_saved(const Decimal& total_deaths, const Decimal& reduction_fraction,
                         const Decimal& horizon_years) {
    return spread_over_horizon(total_deaths, reduction_fraction, horizon_years);
}

PerYearTotal jobs_saved(const Decimal& jobs_lost, const Decimal& fraction,
                        const Decimal& horizon_years) {
    return spread_over_horizon(jobs_lost, fraction, horizon_years);
}

Decimal inflation_reduction(const Decimal& bps, const Decimal& fraction) {
    require(bps.sign() >= 0, "bps must be >= 0");
    require(is_fraction(fraction), "fraction must be in [0, 1]");
    return bps * fraction;
}

Decimal product(std::span<const Decimal> factors) {
    require(!factors.empty(), "product needs at least one factor");
    Decimal out(1);
    for (const auto& f : factors) out *= f;
    return out;
}

const Decimal& FormulaInput::arg(std::string_view name) const {
    auto it = args.find(name);
    if (it == args.end()) {
        throw CalcError(ErrorKind::MissingArgument, "argument '" + std::string(name) + "' not supplied");
    }
    return it->second;
}

FormulaRegistry::FormulaRegistry(std::vector<Formula> formulas) : formulas_(std::move(formulas)) {
    std::set<std::string, std::less<>> names;
    for (const auto& f : formulas_) {
        if (!names.insert(f.spec.name).second) {
            throw CalcError(ErrorKind::ValidationError, "duplicate formula '" + f.spec.name + "'");
        }
        // Probe with unit-valued arguments; every formula's domain contains 1.
        FormulaInput probe;
        for (const auto& a : f.spec.required_args) probe.args.emplace(a.name, Decimal(1));
        if (f.spec.variadic) probe.factors = {Decimal(1)};
        Unit expected = f.spec.output_unit.value_or(Unit::Dimensionless);
        probe.declared_unit = expected;
        FormulaResult r = f.fn(probe);
        if (r.value.unit() != expected || (r.per_year && r.per_year->unit() != expected)) {
            throw CalcError(ErrorKind::UnitMismatch,
                            "formula '" + f.spec.name + "' does not produce its declared unit");
        }
    }
}

const Formula* FormulaRegistry::find(std::string_view name) const {
    for (const auto& f : formulas_) {
        if (f.spec.name == name) return &f;
    }
    return nullptr;
}

const FormulaRegistry& FormulaRegistry::standard() {
    static const FormulaRegistry registry([] {
        std::vector<Formula> fs;
        fs.push_back({{"healthcare_savings",
                       {{"monthly_loss", Unit::USD},
                        {"months", Unit::Dimensionless},
                        {"reduction_fraction", Unit::Dimensionless},
                        {"conversion", Unit::Dimensionless}},
                       Unit::USD,
                       false,
                       "monthly_loss x months x reduction_fraction x conversion"},
                      [](const FormulaInput& in) {
                          return FormulaResult{
                              Quantity::usd(healthcare_savings(in.arg("monthly_loss"), in.arg("months"),
                                                               in.arg("reduction_fraction"),
                                                               in.arg("conversion"))),
                              std::nullopt};
                      }});
        fs.push_back({{"gdp_gain",
                       {{"gdp", Unit::USD},
                        {"covid_attribution", Unit::Dimensionless},
                        {"fraction", Unit::Dimensionless}},
                       Unit::USD,
                       false,
                       "gdp x covid_attribution x fraction"},
                      [](const FormulaInput& in) {
                          return FormulaResult{
                              Quantity::usd(gdp_gain(in.arg("gdp"), in.arg("covid_attribution"),
                                                     in.arg("fraction"))),
                              std::nullopt};
                      }});
        fs.push_back({{"lives_saved",
                       {{"total_deaths", Unit::Lives},
                        {"reduction_fraction", Unit::Dimensionless},
                        {"horizon_years", Unit::Dimensionless}},
                       Unit::Lives,
                       false,
                       "total_deaths x reduction_fraction per year, times horizon_years"},
                      [](const FormulaInput& in) {
                          auto r = lives_saved(in.arg("total_deaths"), in.arg("reduction_fraction"),
                                               in.arg("horizon_years"));
                          return FormulaResult{Quantity(r.total, Unit::Lives),
                                               Quantity(r.per_year, Unit::Lives)};
                      }});
        fs.push_back({{"jobs_saved",
                       {{"jobs_lost", Unit::Jobs},
                        {"fraction", Unit::Dimensionless},
                        {"horizon_years", Unit::Dimensionless}},
                       Unit::Jobs,
                       false,
                       "jobs_lost x fraction per year, times horizon_years"},
                      [](const FormulaInput& in) {
                          auto r = jobs_saved(in.arg("jobs_lost"), in.arg("fraction"),
                                              in.arg("horizon_years"));
                          return FormulaResult{Quantity(r.total, Unit::Jobs),
                                               Quantity(r.per_year, Unit::Jobs)};
                      }});
        fs.push_back({{"inflation_reduction",
                       {{"bps", Unit::BasisPoints}, {"fraction", Unit::Dimensionless}},
                       Unit::BasisPoints,
                       false,
                       "bps x fraction"},
                      [](const FormulaInput& in) {
                          return FormulaResult{
                              Quantity(inflation_reduction(in.arg("bps"), in.arg("fraction")),
                                       Unit::BasisPoints),
                              std::nullopt};
                      }});
        fs.push_back({{"product", {}, std::nullopt, true, "product of the listed factors"},
                      [](const FormulaInput& in) {
                          if (!in.declared_unit || *in.declared_unit == Unit::TBD) {
                              throw CalcError(ErrorKind::InvalidItem,
                                              "product requires a declared output unit");
                          }
                          return FormulaResult{Quantity(product(in.factors), *in.declared_unit),
                                               std::nullopt};
                      }});
        return fs;
    }());
    return registry;
}

}  // namespace impactcalc
