#include <catch_amalgamated.hpp>

#include "generators.hpp"
#include "impactcalc/derivations.hpp"
#include "impactcalc/error.hpp"
#include "impactcalc/sample.hpp"

using namespace impactcalc;

TEST_CASE("healthcare_savings", "[derivations]") {
    CHECK(healthcare_savings(50000000000_dec, 12_dec, 0.001_dec, 0.10_dec) == 60000000_dec);
    CHECK(healthcare_savings(50000000000_dec, 12_dec, 0.001_dec, 1_dec) == 600000000_dec);
    CHECK(healthcare_savings(123456_dec, 7_dec, 0_dec, 0.5_dec).is_zero());
    CHECK_THROWS_AS(healthcare_savings(1_dec, 0_dec, 0.5_dec, 0.5_dec), CalcError);
    CHECK_THROWS_AS(healthcare_savings(1_dec, 1_dec, 1.5_dec, 0.5_dec), CalcError);
    CHECK_THROWS_AS(healthcare_savings(1_dec, 1_dec, 0.5_dec, -0.1_dec), CalcError);
}

TEST_CASE("gdp_gain", "[derivations]") {
    CHECK(gdp_gain(21000000000000_dec, 0.04_dec, 0.001_dec) == 840000000_dec);
    CHECK(gdp_gain(21000000000000_dec, 0.04_dec, 1_dec) == 840000000000_dec);
    CHECK(gdp_gain(5_dec, 0_dec, 0.3_dec).is_zero());
    CHECK_THROWS_AS(gdp_gain(-1_dec, 0.1_dec, 0.1_dec), CalcError);
}

TEST_CASE("lives_saved and jobs_saved", "[derivations]") {
    CHECK(lives_saved(793000_dec, 0.01_dec, 3_dec) == PerYearTotal{7930_dec, 23790_dec});
    CHECK(lives_saved(793000_dec, 0_dec, 3_dec) == PerYearTotal{0_dec, 0_dec});
    CHECK(lives_saved(1000000_dec, 0.005_dec, 2_dec) == PerYearTotal{5000_dec, 10000_dec});
    CHECK(jobs_saved(22000000_dec, 0.001_dec, 3_dec) == PerYearTotal{22000_dec, 66000_dec});
    CHECK(jobs_saved(22000000_dec, 0_dec, 3_dec) == PerYearTotal{0_dec, 0_dec});
    CHECK(jobs_saved(10000000_dec, 0.002_dec, 1_dec) == PerYearTotal{20000_dec, 20000_dec});
    CHECK_THROWS_AS(lives_saved(1_dec, 0.1_dec, 0_dec), CalcError);
    CHECK_THROWS_AS(jobs_saved(1_dec, 0.1_dec, 1.5_dec), CalcError);
}

TEST_CASE("inflation_reduction and product", "[derivations]") {
    CHECK(inflation_reduction(50_dec, 0.001_dec) == 0.05_dec);
    CHECK(inflation_reduction(50_dec, 0_dec).is_zero());
    CHECK(inflation_reduction(100_dec, 0.5_dec) == 50_dec);
    std::vector<Decimal> fs{80000_dec, 100_dec};
    CHECK(product(fs) == 8000000_dec);
    CHECK_THROWS_AS(product({}), CalcError);
}

TEST_CASE("property: doubling any single argument doubles the output", "[derivations][property]") {
    impactcalc::testing::Gen gen(7);
    for (int i = 0; i < 500; ++i) {
        Decimal loss = gen.cents(1'000'000'000), months = Decimal(gen.integer(1, 12));
        Decimal red = Decimal::from_scaled(gen.integer(0, 5000), 4);  // <= 0.5 so 2x stays a fraction
        Decimal conv = Decimal::from_scaled(gen.integer(0, 50), 2);
        Decimal base = healthcare_savings(loss, months, red, conv);
        CHECK(healthcare_savings(loss * 2_dec, months, red, conv) == base * 2_dec);
        CHECK(healthcare_savings(loss, months * 2_dec, red, conv) == base * 2_dec);
        CHECK(healthcare_savings(loss, months, red * 2_dec, conv) == base * 2_dec);
        CHECK(healthcare_savings(loss, months, red, conv * 2_dec) == base * 2_dec);

        Decimal gdp = gen.cents(1'000'000'000'000);
        Decimal g = gdp_gain(gdp, conv, red);
        CHECK(gdp_gain(gdp * 2_dec, conv, red) == g * 2_dec);
        CHECK(gdp_gain(gdp, conv * 2_dec, red) == g * 2_dec);
        CHECK(gdp_gain(gdp, conv, red * 2_dec) == g * 2_dec);

        Decimal deaths = gen.count(2'000'000), years = Decimal(gen.integer(1, 5));
        PerYearTotal l = lives_saved(deaths, red, years);
        CHECK(lives_saved(deaths * 2_dec, red, years).total == l.total * 2_dec);
        CHECK(lives_saved(deaths, red * 2_dec, years).per_year == l.per_year * 2_dec);
        CHECK(lives_saved(deaths, red, years * 2_dec).total == l.total * 2_dec);
        CHECK(jobs_saved(deaths, red, years).total == deaths * red * years);

        Decimal bps = gen.count(500);
        CHECK(inflation_reduction(bps * 2_dec, red) == inflation_reduction(bps, red) * 2_dec);
        CHECK(inflation_reduction(bps, red * 2_dec) == inflation_reduction(bps, red) * 2_dec);

        // Zero annihilation.
        CHECK(healthcare_savings(loss, months, 0_dec, conv).is_zero());
        CHECK(healthcare_savings(loss, months, red, 0_dec).is_zero());
        CHECK(gdp_gain(gdp, 0_dec, red).is_zero());
        CHECK(gdp_gain(gdp, conv, 0_dec).is_zero());
        CHECK(lives_saved(deaths, 0_dec, years).total.is_zero());
        CHECK(jobs_saved(deaths, 0_dec, years).total.is_zero());
        CHECK(inflation_reduction(bps, 0_dec).is_zero());
    }
}

TEST_CASE("registry covers the golden scenario", "[derivations]") {
    const auto& reg = FormulaRegistry::standard();
    for (const auto& item : sample_scenario().line_items) {
        if (const auto* d = std::get_if<DerivedSource>(&item.source)) {
            INFO(d->formula);
            CHECK(reg.find(d->formula) != nullptr);
        }
    }
    CHECK(reg.find("product") != nullptr);
    CHECK(reg.find("nonexistent") == nullptr);
}

TEST_CASE("registry output units match their specs", "[derivations]") {
    for (const auto& f : FormulaRegistry::standard().formulas()) {
        FormulaInput in;
        for (const auto& a : f.spec.required_args) {
            bool count = a.name == "months" || a.name == "horizon_years";
            in.args.emplace(a.name, count ? 2_dec : 0.5_dec);
        }
        if (f.spec.variadic) in.factors = {2_dec, 3_dec};
        in.declared_unit = f.spec.output_unit.value_or(Unit::Jobs);
        FormulaResult r = f.fn(in);
        INFO(f.spec.name);
        CHECK(r.value.unit() == *in.declared_unit);
    }
}

TEST_CASE("registry rejects mislabelled and duplicate formulas", "[derivations]") {
    Formula liar{{"liar", {}, Unit::USD, false, ""},
                 [](const FormulaInput&) { return FormulaResult{Quantity(1_dec, Unit::Lives), std::nullopt}; }};
    CHECK_THROWS_AS(FormulaRegistry({liar}), CalcError);

    Formula honest{{"honest", {}, Unit::USD, false, ""},
                   [](const FormulaInput&) { return FormulaResult{Quantity::usd(1_dec), std::nullopt}; }};
    CHECK_NOTHROW(FormulaRegistry({honest}));
    CHECK_THROWS_AS(FormulaRegistry({honest, honest}), CalcError);
}
